//! Lifting colorings of a reduced web back to the original web.
//!
//! Each lift colors everything outside the removed feature exactly as the
//! reduced web does and fills in the sides of the feature. For a digon the
//! two sides get the two colors missing from the strand, in an order chosen
//! by the sign; for a square the sides are forced by the strand colors plus
//! one fixed choice when both strands agree.
//!
//! The degree bookkeeping is local to a disc around the feature, so lifts
//! are only defined when the removed digon or square was a bounded face.

use crate::color::Color;
use crate::coloring::Coloring;
use crate::web::{EdgeId, WebMap};

use super::surgery::{EdgeImage, Reduction, Shape, StrandImage, Witness};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LiftError {
    #[error("the surgery witness does not match the given webs or coloring")]
    IncompatibleSurgeryWitness,
}

/// Which of the two digon lifts to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

fn strand_color(c: &Coloring, img: StrandImage) -> Color {
    match img {
        StrandImage::Edge(e) => c.edge(e),
        StrandImage::Loop(l) => c.loop_color(l),
    }
}

/// Colors of all original edges outside the feature (sides left `None`) and
/// of the original loops.
fn pull_back(
    w: &WebMap,
    reduced: &Reduction,
    c: &Coloring,
) -> Result<(Vec<Option<Color>>, Vec<Color>), LiftError> {
    let wit = &reduced.witness;
    let r = &reduced.web;
    if !wit.bounded
        || wit.edges.len() != w.edge_count()
        || wit.loops.len() != w.loop_count()
        || c.edges.len() != r.edge_count()
        || c.loops.len() != r.loop_count()
    {
        return Err(LiftError::IncompatibleSurgeryWitness);
    }
    let edges = wit
        .edges
        .iter()
        .map(|img| match *img {
            EdgeImage::Survive(e) => Some(c.edge(e)),
            EdgeImage::Chain(s) => Some(strand_color(c, s)),
            EdgeImage::Internal => None,
        })
        .collect();
    let loops = wit
        .loops
        .iter()
        .map(|l| {
            l.map(|l| c.loop_color(l))
                .ok_or(LiftError::IncompatibleSurgeryWitness)
        })
        .collect::<Result<_, _>>()?;
    Ok((edges, loops))
}

fn attachment_color(wit: &Witness, c: &Coloring, e: EdgeId) -> Color {
    match wit.edges[e.0] {
        EdgeImage::Chain(s) => strand_color(c, s),
        EdgeImage::Survive(n) => c.edge(n),
        EdgeImage::Internal => unreachable!("attachments are never sides"),
    }
}

fn finish(edges: Vec<Option<Color>>, loops: Vec<Color>) -> Coloring {
    Coloring::new(
        edges
            .into_iter()
            .map(|c| c.expect("all sides colored"))
            .collect(),
        loops,
    )
}

/// `φ₊` / `φ₋`: lifts a coloring of the digon-reduced web. With strand
/// color `x` and remaining colors `y < z`, `φ₊` puts `y` on the side the
/// counterclockwise boundary runs forward and `z` on the other, so the digon
/// becomes a positive cycle of `D_x`; `φ₋` swaps them.
pub fn digon_lift(
    w: &WebMap,
    reduced: &Reduction,
    c: &Coloring,
    sign: Sign,
) -> Result<Coloring, LiftError> {
    let Shape::Digon {
        along,
        other,
        forward,
    } = reduced.witness.shape
    else {
        return Err(LiftError::IncompatibleSurgeryWitness);
    };
    let (mut edges, loops) = pull_back(w, reduced, c)?;
    let x = attachment_color(&reduced.witness, c, reduced.witness.attachments[0]);
    let (y, z) = x.others();
    let (fwd, bwd) = match sign {
        Sign::Plus => (y, z),
        Sign::Minus => (z, y),
    };
    let back = if forward == along { other } else { along };
    edges[forward.0] = Some(fwd);
    edges[back.0] = Some(bwd);
    Ok(finish(edges, loops))
}

/// Side colors of a smoothed square: `(along edge of the first pair, along
/// edge of the second pair, both across edges)`.
type SquareSides = (Color, Color, Color);

/// Lift table for strands colored `x` (first pair) and `y` (second pair)
/// with `x <= y`.
fn square_table(x: Color, y: Color) -> SquareSides {
    if x == y {
        let across = if x == Color::Blue {
            Color::Red
        } else {
            Color::Blue
        };
        let along = Color::third(x, across);
        (along, along, across)
    } else {
        (y, x, Color::third(x, y))
    }
}

/// The half-turn exchanges the two pairs of a square.
fn half_turn((a, b, across): SquareSides) -> SquareSides {
    (b, a, across)
}

/// `φ′` (horizontal) / `φ″` (vertical): lifts a coloring of a smoothing;
/// which one is applied is recorded in the witness.
pub fn square_lift(w: &WebMap, reduced: &Reduction, c: &Coloring) -> Result<Coloring, LiftError> {
    let wit = &reduced.witness;
    let Shape::Square { sides, .. } = wit.shape else {
        return Err(LiftError::IncompatibleSurgeryWitness);
    };
    let (mut edges, loops) = pull_back(w, reduced, c)?;
    let [p1, p2] = [wit.pairs[0], wit.pairs[1]];
    let strand = |v| attachment_color(wit, c, wit.attachment_of(v).unwrap());
    let (x, y) = (strand(p1.source), strand(p2.source));
    let (a1, a2, across) = if x <= y {
        square_table(x, y)
    } else {
        half_turn(square_table(y, x))
    };
    for s in sides {
        edges[s.0] = Some(if s == p1.along {
            a1
        } else if s == p2.along {
            a2
        } else {
            across
        });
    }
    Ok(finish(edges, loops))
}
