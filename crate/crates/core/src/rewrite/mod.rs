//! Evaluation of the bracket by local rewriting.
//!
//! Three relations suffice: a circle contributes a factor `[3]`, a digon
//! collapses to a strand with a factor `[2]`, and a square is the sum of
//! its two smoothings. Every closed web has a loop, a bounded digon or a
//! bounded square, so repeated surgery ends at the empty web. The surgeries
//! carry a [`Witness`] that lets colorings of the smaller webs be lifted
//! back to the original one.

mod canon;
mod generate;
mod lift;
mod surgery;

use std::collections::HashMap;
use std::fmt;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::laurent::{quantum_int, LaurentPoly};
use crate::web::{FaceId, ReducibleFeature, WebMap};

pub use canon::{canonical_hash, canonical_key};
pub use generate::{
    add_circle, generate_web, insert_digon_on_edge, insert_digon_on_loop, unsmooth,
};
pub use lift::{digon_lift, square_lift, LiftError, Sign};
pub use surgery::{
    reduce_digon, remove_circle, smooth_square, square_frame, EdgeImage, Pair, Reduction, Shape,
    Smoothing, StrandImage, SurgeryError, Witness,
};

#[derive(Clone, Debug, Default)]
pub struct ReduceOptions {
    /// Cache results by canonical map key.
    pub memo: bool,
    /// Pick a uniformly random reducible feature instead of the first one.
    pub shuffle_seed: Option<u64>,
    /// Record every step.
    pub trace: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Step {
    Circle,
    Digon(FaceId),
    Square(FaceId),
    /// Start of the horizontal (`+`) or vertical branch of a square.
    Branch(Smoothing),
    /// Result looked up in the memo table.
    Cached,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub depth: usize,
    pub step: Step,
    /// Canonical hash of the web the step was applied to.
    pub hash: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub steps: Vec<TraceStep>,
}

impl fmt::Display for ReductionTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            let pad = "  ".repeat(s.depth);
            let text = match s.step {
                Step::Circle => "CIRCLE ×[3]".to_string(),
                Step::Digon(fc) => format!("DIGON f={} ×[2]", fc.0),
                Step::Square(fc) => format!("SQUARE f={} (+)", fc.0),
                Step::Branch(Smoothing::Horizontal) => "horizontal".to_string(),
                Step::Branch(Smoothing::Vertical) => "vertical".to_string(),
                Step::Cached => "CACHED".to_string(),
            };
            writeln!(f, "{pad}{text}  #{:016x}", s.hash)?;
        }
        Ok(())
    }
}

struct Reducer {
    opts: ReduceOptions,
    rng: Option<ChaCha8Rng>,
    memo: HashMap<Vec<Vec<u32>>, LaurentPoly>,
    trace: ReductionTrace,
}

impl Reducer {
    fn log(&mut self, depth: usize, step: Step, map: &WebMap) {
        if self.opts.trace {
            self.trace.steps.push(TraceStep {
                depth,
                step,
                hash: canonical_hash(map),
            });
        }
    }

    fn pick(&mut self, map: &WebMap) -> ReducibleFeature {
        match &mut self.rng {
            Some(rng) => *map
                .reducible_features()
                .choose(rng)
                .expect("a nonempty web has a reducible feature"),
            None => map
                .find_reducible()
                .expect("a nonempty web has a reducible feature"),
        }
    }

    fn reduce(&mut self, map: &WebMap, depth: usize) -> LaurentPoly {
        if map.is_empty() {
            return LaurentPoly::one();
        }
        let key = self.opts.memo.then(|| canonical_key(map));
        if let Some(hit) = key.as_ref().and_then(|k| self.memo.get(k)) {
            let hit = hit.clone();
            self.log(depth, Step::Cached, map);
            return hit;
        }
        let value = match self.pick(map) {
            ReducibleFeature::Circle(l) => {
                self.log(depth, Step::Circle, map);
                let next = remove_circle(map, l).expect("loop exists").web;
                quantum_int(3).unwrap() * self.reduce(&next, depth + 1)
            }
            ReducibleFeature::Digon(f) => {
                self.log(depth, Step::Digon(f), map);
                let next = reduce_digon(map, f).expect("face is a digon").web;
                quantum_int(2).unwrap() * self.reduce(&next, depth + 1)
            }
            ReducibleFeature::Square(f) => {
                self.log(depth, Step::Square(f), map);
                let (h, v) = smooth_square(map, f).expect("face is a square");
                self.log(depth + 1, Step::Branch(Smoothing::Horizontal), &h.web);
                let a = self.reduce(&h.web, depth + 2);
                self.log(depth + 1, Step::Branch(Smoothing::Vertical), &v.web);
                let b = self.reduce(&v.web, depth + 2);
                a + b
            }
        };
        if let Some(k) = key {
            self.memo.insert(k, value.clone());
        }
        value
    }
}

/// The bracket of a valid closed web computed by local rewriting.
pub fn bracket_reduce(map: &WebMap) -> LaurentPoly {
    bracket_reduce_with(map, &ReduceOptions::default()).0
}

/// [`bracket_reduce`] with options; the trace is empty unless requested.
pub fn bracket_reduce_with(map: &WebMap, opts: &ReduceOptions) -> (LaurentPoly, ReductionTrace) {
    let mut r = Reducer {
        opts: opts.clone(),
        rng: opts.shuffle_seed.map(ChaCha8Rng::seed_from_u64),
        memo: HashMap::new(),
        trace: ReductionTrace::default(),
    };
    let p = r.reduce(map, 0);
    (p, r.trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::bracket_enum;
    use crate::web::{circle, theta, Winding};

    #[test]
    fn small_brackets() {
        assert_eq!(
            bracket_reduce(&circle(Winding::Cw)),
            quantum_int(3).unwrap()
        );
        assert_eq!(bracket_reduce(&WebMap::empty()), LaurentPoly::one());
        let t = theta();
        assert_eq!(
            bracket_reduce(&t),
            quantum_int(2).unwrap() * quantum_int(3).unwrap()
        );
    }

    #[test]
    fn generated_webs_validate_and_agree() {
        for seed in 0..40 {
            let w = generate_web(seed, 5);
            assert!(w.validate().is_valid(), "seed {seed}: {}", w.validate());
            assert_eq!(bracket_reduce(&w), bracket_enum(&w), "seed {seed}");
        }
    }

    #[test]
    fn trace_lines() {
        let (_, trace) = bracket_reduce_with(
            &theta(),
            &ReduceOptions {
                trace: true,
                ..Default::default()
            },
        );
        let text = trace.to_string();
        assert!(text.starts_with("DIGON f="));
        assert!(text.lines().nth(1).unwrap().starts_with("  CIRCLE ×[3]"));
    }
}
