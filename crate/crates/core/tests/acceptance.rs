//! Exit criteria. Prints one line per criterion and exits nonzero if any
//! of them fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use webcolor::coloring::{configuration, degree_table, enumerate_colorings, CycleWalk};
use webcolor::kempe::{
    bicolored_cycles, connected_components, cycle_orientation_in, delta_dt, kempe_graph, tau,
    KempeMode,
};
use webcolor::rewrite::{
    digon_lift, reduce_digon, smooth_square, square_lift, Reduction, Shape, Sign, Smoothing,
};
use webcolor::web::{circle, theta, CubicGraph, CubicStructure};
use webcolor::{
    bracket_enum, bracket_reduce, total_degree, Color, Coloring, LaurentPoly, Orientation, WebMap,
    Winding,
};

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Circle, theta, cube, the other fixtures, their mirrors and 200 seeded
/// generated webs of at most 20 vertices.
fn corpus() -> Vec<WebMap> {
    let mut out = common::fixtures();
    out.extend(common::fixtures().iter().map(WebMap::mirror));
    out.extend(common::generated(200));
    out
}

fn poly(text: &str) -> LaurentPoly {
    text.parse().unwrap()
}

fn ccw_circle_colorings() -> (WebMap, [Coloring; 3]) {
    let w = circle(Winding::Ccw);
    let c = Color::ALL.map(|x| Coloring::new(vec![], vec![x]));
    (w, c)
}

fn criterion_1a() -> Outcome {
    let (w, cols) = ccw_circle_colorings();
    let dt: Vec<i64> = cols.iter().map(|c| total_degree(&w, c)).collect();
    ensure(dt == [2, 0, -2], || {
        format!("d_t row {dt:?}, expected [2, 0, -2]")
    })?;
    let b = bracket_enum(&w);
    ensure(b == poly("-2:1 0:1 2:1"), || format!("bracket {b}"))?;
    ensure(bracket_reduce(&w) == b, || {
        "rewriting engine disagrees".into()
    })?;
    Ok(format!("d_t = {dt:?}, bracket {b}"))
}

fn criterion_1b() -> Outcome {
    // rows D_red, D_green, D_blue; columns w_red, w_green, w_blue
    let printed = [[0, -1, -1], [1, 0, -1], [1, 1, 0]];
    let (w, cols) = ccw_circle_colorings();
    let mut got = [[0i64; 3]; 3];
    for (j, c) in cols.iter().enumerate() {
        let t = degree_table(&w, c);
        for i in 0..3 {
            got[i][j] = t[i];
        }
    }
    let mut diffs = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            if got[i][j] != printed[i][j] {
                diffs.push(format!(
                    "D_{}(w_{}) = {} (table {})",
                    Color::ALL[i],
                    Color::ALL[j],
                    got[i][j],
                    printed[i][j]
                ));
            }
        }
    }
    ensure(diffs.is_empty(), || {
        format!("{}", diffs.join(", "))
    })?;
    Ok(format!("{got:?}"))
}

fn criterion_2(corpus: &[WebMap]) -> Outcome {
    let max_v = corpus.iter().map(WebMap::vertex_count).max().unwrap_or(0);
    for w in corpus {
        let (e, r) = (bracket_enum(w), bracket_reduce(w));
        ensure(e == r, || format!("{}: enum {e} vs reduce {r}", w.name()))?;
    }
    let cube = common::web("cube");
    ensure(bracket_enum(&cube) == poly("-4:2 -2:6 0:8 2:6 4:2"), || {
        "cube bracket".into()
    })?;
    Ok(format!("{} webs, up to {max_v} vertices", corpus.len()))
}

/// Counts proper colorings by trying every assignment of colors to edges
/// and loops.
fn brute_force_count(w: &WebMap) -> u64 {
    let (ne, nl) = (w.edge_count(), w.loop_count());
    let mut count = 0;
    for code in 0..3u64.pow(ne as u32) {
        let mut k = code;
        let edges: Vec<Color> = (0..ne)
            .map(|_| {
                let c = Color::from_index((k % 3) as usize);
                k /= 3;
                c
            })
            .collect();
        let proper = (0..w.vertex_count()).all(|v| {
            let cs: BTreeSet<Color> = w.incident(v).iter().map(|&e| edges[e]).collect();
            cs.len() == 3
        });
        count += proper as u64;
    }
    count * 3u64.pow(nl as u32)
}

fn criterion_3(corpus: &[WebMap]) -> Outcome {
    let mut brute = 0;
    for w in corpus {
        let n = enumerate_colorings(w).len() as i64;
        let at_one = bracket_reduce(w).eval_at_one();
        ensure(at_one == n, || {
            format!("{}: bracket(1) = {at_one}, |col| = {n}", w.name())
        })?;
        if w.edge_count() <= 12 {
            let b = brute_force_count(w) as i64;
            ensure(b == n, || {
                format!("{}: brute force {b}, enumeration {n}", w.name())
            })?;
            brute += 1;
        }
    }
    let t = theta();
    let n = enumerate_colorings(&t).len();
    ensure(n == 6, || format!("theta has {n} colorings"))?;
    let b = bracket_reduce(&t);
    ensure(b == poly("-3:1 -1:2 1:2 3:1"), || {
        format!("theta bracket {b}")
    })?;
    Ok(format!(
        "{} webs ({brute} also by brute force); theta: 6, {b}",
        corpus.len()
    ))
}

fn delta(w: &WebMap, lifted: &Coloring, r: &Reduction, c: &Coloring) -> [i64; 3] {
    let (a, b) = (degree_table(w, lifted), degree_table(&r.web, c));
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

/// Per-color degree changes of the digon lifts, by strand color.
fn digon_expected(x: Color, sign: Sign) -> [i64; 3] {
    let mut d = [0; 3];
    d[x.index()] = if sign == Sign::Plus { 1 } else { -1 };
    d
}

/// Per-color degree changes of the square lifts for equal strand colors,
/// indexed by strand color.
const HORIZONTAL_SAME: [[i64; 3]; 3] = [[-1, 1, 0], [1, -1, 0], [0, -1, 1]];
const VERTICAL_SAME: [[i64; 3]; 3] = [[1, -1, 0], [-1, 1, 0], [0, 1, -1]];

/// Colors of the two strands of a smoothing, read at the source corners.
fn strand_colors(r: &Reduction, lifted: &Coloring) -> (Color, Color) {
    let wit = &r.witness;
    let at = |v| lifted.edge(wit.attachment_of(v).unwrap());
    (at(wit.pairs[0].source), at(wit.pairs[1].source))
}

fn criterion_4() -> Outcome {
    let mut webs = common::fixtures();
    webs.extend(common::fixtures().iter().map(WebMap::mirror));
    let (mut digons, mut squares, mut lifts) = (0, 0, 0);
    for w in &webs {
        let all: BTreeSet<Coloring> = enumerate_colorings(w).into_iter().collect();
        let faces = w.faces();
        for f in faces.ids().filter(|&f| !faces.is_outer(f)) {
            let mut image = BTreeSet::new();
            let tag = || format!("{} face {}", w.name(), f.0);
            match faces.size(f) {
                2 => {
                    let r = reduce_digon(w, f).map_err(|e| format!("{}: {e}", tag()))?;
                    for c in enumerate_colorings(&r.web) {
                        let d0 = total_degree(&r.web, &c);
                        for (sign, shift) in [(Sign::Plus, 1), (Sign::Minus, -1)] {
                            let l = digon_lift(w, &r, &c, sign).map_err(|e| e.to_string())?;
                            ensure(l.is_proper(w), || format!("{}: improper lift", tag()))?;
                            let d = total_degree(w, &l);
                            ensure(d == d0 + shift, || format!("{}: shift {}", tag(), d - d0))?;
                            let x = l.edge(r.witness.attachments[0]);
                            let dd = delta(w, &l, &r, &c);
                            ensure(dd == digon_expected(x, sign), || {
                                format!("{}: per-color change {dd:?}", tag())
                            })?;
                            ensure(image.insert(l), || format!("{}: lifts collide", tag()))?;
                            lifts += 1;
                        }
                    }
                    digons += 1;
                }
                4 => {
                    let Ok((h, v)) = smooth_square(w, f) else {
                        continue;
                    };
                    for r in [&h, &v] {
                        let Shape::Square { smoothing, .. } = r.witness.shape else {
                            unreachable!()
                        };
                        for c in enumerate_colorings(&r.web) {
                            let l = square_lift(w, r, &c).map_err(|e| e.to_string())?;
                            ensure(l.is_proper(w), || format!("{}: improper lift", tag()))?;
                            let dd = delta(w, &l, r, &c);
                            let (x, y) = strand_colors(r, &l);
                            let expected = match (x == y, smoothing) {
                                (false, _) => [0, 0, 0],
                                (true, Smoothing::Horizontal) => HORIZONTAL_SAME[x.index()],
                                (true, Smoothing::Vertical) => VERTICAL_SAME[x.index()],
                            };
                            ensure(dd == expected, || {
                                format!(
                                    "{} {smoothing:?}: per-color change {dd:?}, table {expected:?}",
                                    tag()
                                )
                            })?;
                            ensure(image.insert(l), || format!("{}: lifts collide", tag()))?;
                            lifts += 1;
                        }
                    }
                    squares += 1;
                }
                _ => continue,
            }
            ensure(image == all, || format!("{}: images miss colorings", tag()))?;
        }
    }
    ensure(digons > 0 && squares > 0, || "no features checked".into())?;
    Ok(format!(
        "{digons} digons, {squares} squares, {lifts} lifted colorings, zero violations"
    ))
}

fn criterion_5(corpus: &[WebMap]) -> Outcome {
    // (orientation, Δd_t) pairs seen anywhere in the corpus
    let mut sign_map = BTreeSet::new();
    let mut cycles = 0;
    for w in corpus {
        for c in enumerate_colorings(w) {
            for u in [Color::Red, Color::Blue] {
                for cyc in bicolored_cycles(w, &c, u) {
                    let d = delta_dt(w, &c, &cyc).map_err(|e| e.to_string())?;
                    ensure(d.abs() == 2, || format!("{}: Δd_t = {d}", w.name()))?;
                    sign_map.insert((
                        cycle_orientation_in(w, &c, &cyc) == Orientation::Positive,
                        d,
                    ));
                    cycles += 1;
                }
            }
        }
    }
    let expected: BTreeSet<(bool, i64)> = [(false, 2), (true, -2)].into_iter().collect();
    ensure(sign_map == expected, || {
        format!("sign map {sign_map:?} is not a function of orientation")
    })?;
    Ok(format!("{cycles} cycles; positive → -2, negative → +2"))
}

fn partitions<G: CubicStructure + ?Sized>(g: &G) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    (
        connected_components(&kempe_graph(g, KempeMode::Weak)),
        connected_components(&kempe_graph(g, KempeMode::Strong)),
    )
}

fn criterion_6(corpus: &[WebMap]) -> Outcome {
    let mut colorings = 0;
    for w in corpus {
        let (weak, strong) = partitions(w);
        ensure(weak.len() == 1, || {
            format!("{}: {} weak components", w.name(), weak.len())
        })?;
        ensure(weak == strong, || {
            format!("{}: weak and strong partitions differ", w.name())
        })?;
        colorings += weak[0].len();
    }
    for g in [common::graph("dodecahedron"), common::graph("k33")] {
        let (weak, strong) = partitions(&g);
        ensure(weak == strong, || {
            format!("{}: weak and strong partitions differ", g.name)
        })?;
    }
    Ok(format!(
        "{} webs connected ({colorings} colorings); partitions coincide",
        corpus.len()
    ))
}

/// Image of a dodecahedron coloring under the fifth-turn rotation.
fn rotate(g: &CubicGraph, c: &Coloring) -> Coloring {
    let label = |v: usize| g.vertices[v].parse::<usize>().unwrap();
    let index = |x: usize| {
        g.vertices
            .iter()
            .position(|n| n.parse::<usize>().unwrap() == x)
            .unwrap()
    };
    let r = CubicGraph::dodecahedron_rotation;
    let mut edges = c.edges.clone();
    for (e, (_, a, b)) in g.edges.iter().enumerate() {
        let img = g
            .edge_between(index(r(label(*a))), index(r(label(*b))))
            .unwrap();
        edges[img] = c.edges[e];
    }
    Coloring::new(edges, vec![])
}

/// 3×3 Latin squares: rows are permutations, columns have distinct entries.
fn latin_squares() -> usize {
    let perms = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    let mut n = 0;
    for a in &perms {
        for b in &perms {
            for c in &perms {
                n += (0..3).all(|j| a[j] != b[j] && b[j] != c[j] && a[j] != c[j]) as usize;
            }
        }
    }
    n
}

fn criterion_7() -> Outcome {
    let g = common::graph("dodecahedron");
    let ham = common::graph_coloring(&g, "dodecahedron-hamiltonian.coloring");
    let rotated = rotate(&g, &ham);
    ensure(
        rotated == common::graph_coloring(&g, "dodecahedron-hamiltonian-rotated.coloring"),
        || "rotated fixture does not match the rotation".into(),
    )?;
    for u in Color::ALL {
        let n = bicolored_cycles(&g, &ham, u).len();
        ensure(n == 1, || format!("{n} cycles avoiding {u}"))?;
    }
    let kg = kempe_graph(&g, KempeMode::Weak);
    let comps = connected_components(&kg);
    ensure(comps.len() >= 2, || {
        "dodecahedron Kempe graph is connected".into()
    })?;
    let comp_of = |c: &Coloring| {
        let i = kg.colorings.iter().position(|x| x == c).unwrap();
        comps.iter().position(|m| m.contains(&i)).unwrap()
    };
    let (a, b) = (comp_of(&ham), comp_of(&rotated));
    ensure(a != b, || {
        "the coloring and its rotation are Kempe equivalent".into()
    })?;

    let k = common::graph("k33");
    let n = enumerate_colorings(&k).len();
    let oracle = latin_squares();
    ensure(n == oracle && n == 12, || {
        format!("K3,3 has {n} colorings, oracle {oracle}")
    })?;
    let kc = connected_components(&kempe_graph(&k, KempeMode::Weak)).len();
    ensure(kc >= 2, || "K3,3 Kempe graph is connected".into())?;
    Ok(format!(
        "dodecahedron: {} components, rotation moves component {a} to {b}; K3,3: 12 colorings, {kc} components",
        comps.len()
    ))
}

fn criterion_8(corpus: &[WebMap]) -> Outcome {
    for w in corpus {
        ensure(w.validate().is_valid(), || {
            format!("{} does not validate", w.name())
        })?;
        if !w.is_empty() {
            w.find_reducible()
                .map_err(|e| format!("{}: {e}", w.name()))?;
        }
        for comp in w.components() {
            let faces = comp.faces();
            ensure(faces.ids().all(|f| faces.size(f) % 2 == 0), || {
                format!("{}: odd face", w.name())
            })?;
            if comp.vertex_count() > 0 {
                let chi =
                    comp.vertex_count() as i64 - comp.edge_count() as i64 + faces.len() as i64;
                ensure(chi == 2, || format!("{}: V - E + F = {chi}", w.name()))?;
            }
        }
    }
    let mut checked = 0;
    for name in common::WEB_FIXTURES {
        let Some(xy) = common::coords(name) else {
            continue;
        };
        let w = common::web(name);
        for c in enumerate_colorings(&w) {
            for u in Color::ALL {
                for cycle in configuration(&w, &c, u).cycles {
                    let CycleWalk::Darts(walk) = cycle.walk else {
                        continue;
                    };
                    let geo = common::oracle(&w, &xy, &walk);
                    ensure(cycle.orientation == geo, || {
                        format!("{name}: orientation disagrees with area")
                    })?;
                    checked += 1;
                }
            }
        }
    }
    ensure(checked > 0, || "no coordinate fixtures".into())?;
    Ok(format!(
        "{} webs; {checked} cycles agree with signed area",
        corpus.len()
    ))
}

fn criterion_9(corpus: &[WebMap]) -> Outcome {
    let mut moves = 0;
    for w in corpus {
        let cols = enumerate_colorings(w);
        ensure(cols.iter().all(|c| c.is_proper(w)), || {
            format!("{}: improper coloring", w.name())
        })?;
        for c in &cols {
            for u in Color::ALL {
                for cyc in bicolored_cycles(w, c, u) {
                    let d = tau(c, &cyc).map_err(|e| e.to_string())?;
                    ensure(d.is_proper(w), || {
                        format!("{}: τ breaks properness", w.name())
                    })?;
                    ensure(tau(&d, &cyc).as_ref() == Ok(c), || {
                        format!("{}: τ not an involution", w.name())
                    })?;
                    moves += 1;
                }
            }
        }
        let b = bracket_reduce(w);
        ensure(b.is_bar_invariant(), || {
            format!("{}: {b} is not bar-invariant", w.name())
        })?;
        let m = bracket_enum(&w.mirror());
        ensure(m == b.bar(), || format!("{}: mirror bracket {m}", w.name()))?;
    }
    Ok(format!("{} webs, {moves} τ-moves", corpus.len()))
}

fn main() {
    let started = Instant::now();
    let corpus = corpus();
    type Check<'a> = Box<dyn Fn() -> Outcome + 'a>;
    let checks: Vec<(&str, Option<Duration>, Check)> = vec![
        ("1a", Some(Duration::from_secs(1)), Box::new(criterion_1a)),
        ("1b", Some(Duration::from_secs(1)), Box::new(criterion_1b)),
        (
            "2",
            Some(Duration::from_secs(120)),
            Box::new(|| criterion_2(&corpus)),
        ),
        ("3", None, Box::new(|| criterion_3(&corpus))),
        ("4", None, Box::new(criterion_4)),
        ("5", None, Box::new(|| criterion_5(&corpus))),
        (
            "6",
            Some(Duration::from_secs(120)),
            Box::new(|| criterion_6(&corpus)),
        ),
        ("7", None, Box::new(criterion_7)),
        ("8", None, Box::new(|| criterion_8(&corpus))),
        ("9", None, Box::new(|| criterion_9(&corpus))),
    ];
    let mut failed = 0;
    for (id, limit, check) in checks {
        let t = Instant::now();
        let mut result = check();
        let took = t.elapsed();
        if let (Ok(_), Some(limit)) = (&result, limit) {
            if took > limit {
                result = Err(format!("took {took:.2?}, limit {limit:?}"));
            }
        }
        match result {
            Ok(msg) => println!("criterion {id:>2}: PASS  {msg}  [{took:.2?}]"),
            Err(msg) => {
                failed += 1;
                println!("criterion {id:>2}: FAIL  {msg}  [{took:.2?}]");
            }
        }
    }
    let total = started.elapsed();
    if total > Duration::from_secs(300) {
        failed += 1;
        println!("total runtime {total:.2?} exceeds 5 min");
    }
    println!("acceptance: {failed} failed, total {total:.2?}");
    if failed > 0 {
        std::process::exit(1);
    }
}
