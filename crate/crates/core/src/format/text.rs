use std::collections::HashMap;

use crate::color::Color;
use crate::coloring::Coloring;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ColoringError {
    #[error("malformed assignment `{0}`, expected <id>=<color>")]
    Syntax(String),
    #[error("unknown color in `{0}`")]
    UnknownColor(String),
    #[error("unknown edge or loop `{0}`")]
    UnknownId(String),
    #[error("`{0}` names both an edge and a loop; use the `edges / loops` form")]
    Ambiguous(String),
    #[error("`{0}` is assigned twice")]
    Duplicate(String),
    #[error("`{0}` has no color")]
    Missing(String),
    #[error("coloring is not proper")]
    NotProper,
}

/// Serializes a coloring as `"e1=red e2=green / c=blue"`.
pub fn format_coloring(edge_names: &[&str], loop_names: &[&str], c: &Coloring) -> String {
    let part = |names: &[&str], cols: &[Color]| {
        names
            .iter()
            .zip(cols)
            .map(|(n, c)| format!("{n}={c}"))
            .collect::<Vec<_>>()
            .join(" ")
    };
    let edges = part(edge_names, &c.edges);
    if loop_names.is_empty() {
        edges
    } else {
        format!("{} / {}", edges, part(loop_names, &c.loops))
            .trim()
            .to_string()
    }
}

/// Parses either the serialized form (`"e1=red e2=green / c=blue"`) or a
/// comma list (`"e1=r,e2=g,c=b"`). Every edge and loop must be assigned.
/// Properness is left to the caller.
pub fn parse_coloring(
    edge_names: &[&str],
    loop_names: &[&str],
    text: &str,
) -> Result<Coloring, ColoringError> {
    let eidx: HashMap<&str, usize> = edge_names
        .iter()
        .enumerate()
        .map(|(i, n)| (*n, i))
        .collect();
    let lidx: HashMap<&str, usize> = loop_names
        .iter()
        .enumerate()
        .map(|(i, n)| (*n, i))
        .collect();
    let mut edges = vec![None; edge_names.len()];
    let mut loops = vec![None; loop_names.len()];
    let (edge_part, loop_part) = match text.split_once('/') {
        Some((a, b)) => (a, Some(b)),
        None => (text, None),
    };
    let assignments = |s: &str| {
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                let (id, col) = t
                    .split_once('=')
                    .ok_or_else(|| ColoringError::Syntax(t.into()))?;
                let col: Color = col
                    .parse()
                    .map_err(|_| ColoringError::UnknownColor(t.into()))?;
                Ok((id.to_string(), col))
            })
            .collect::<Result<Vec<_>, ColoringError>>()
    };
    let put = |slot: &mut Option<Color>, id: &str, col| {
        if slot.replace(col).is_some() {
            return Err(ColoringError::Duplicate(id.into()));
        }
        Ok(())
    };
    for (id, col) in assignments(edge_part)? {
        let (e, l) = (eidx.get(id.as_str()), lidx.get(id.as_str()));
        match (e, l, loop_part.is_some()) {
            (Some(&i), _, true) | (Some(&i), None, false) => put(&mut edges[i], &id, col)?,
            (None, Some(&i), false) => put(&mut loops[i], &id, col)?,
            (Some(_), Some(_), false) => return Err(ColoringError::Ambiguous(id)),
            _ => return Err(ColoringError::UnknownId(id)),
        }
    }
    if let Some(lp) = loop_part {
        for (id, col) in assignments(lp)? {
            let &i = lidx
                .get(id.as_str())
                .ok_or_else(|| ColoringError::UnknownId(id.clone()))?;
            put(&mut loops[i], &id, col)?;
        }
    }
    let edges = edges
        .into_iter()
        .enumerate()
        .map(|(i, c)| c.ok_or_else(|| ColoringError::Missing(edge_names[i].into())))
        .collect::<Result<Vec<_>, _>>()?;
    let loops = loops
        .into_iter()
        .enumerate()
        .map(|(i, c)| c.ok_or_else(|| ColoringError::Missing(loop_names[i].into())))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Coloring::new(edges, loops))
}

/// Planar coordinates for a fixture: a point per vertex and optional bend
/// points per edge (needed to draw parallel edges apart).
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Coords {
    pub vertices: HashMap<String, (f64, f64)>,
    pub bends: HashMap<String, Vec<(f64, f64)>>,
}

/// Parses a `.coords` sidecar: `<vid> <x> <y>` lines, plus
/// `bend <eid> <x> <y>` lines that add bend points to an edge in order.
pub fn parse_coords(text: &str) -> Result<Coords, String> {
    let mut coords = Coords::default();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let num = |s: &str| {
            s.parse::<f64>()
                .map_err(|_| format!("line {}: bad number `{s}`", i + 1))
        };
        match toks.as_slice() {
            ["bend", e, x, y] => coords
                .bends
                .entry(e.to_string())
                .or_default()
                .push((num(x)?, num(y)?)),
            [v, x, y] => {
                coords.vertices.insert(v.to_string(), (num(x)?, num(y)?));
            }
            _ => return Err(format!("line {}: expected `<vid> <x> <y>`", i + 1)),
        }
    }
    Ok(coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_coloring_forms() {
        let e = ["e1", "e2"];
        let l = ["c"];
        let c = parse_coloring(&e, &l, "e1=r,e2=green,c=b").unwrap();
        assert_eq!(
            c,
            Coloring::new(vec![Color::Red, Color::Green], vec![Color::Blue])
        );
        let text = format_coloring(&e, &l, &c);
        assert_eq!(text, "e1=red e2=green / c=blue");
        assert_eq!(parse_coloring(&e, &l, &text).unwrap(), c);
    }

    #[test]
    fn coloring_errors() {
        let e = ["e1", "x"];
        let l = ["x"];
        assert!(matches!(
            parse_coloring(&e, &l, "e1=r"),
            Err(ColoringError::Ambiguous(_)) | Err(ColoringError::Missing(_))
        ));
        assert!(matches!(
            parse_coloring(&e, &l, "e1=r,x=g"),
            Err(ColoringError::Ambiguous(_))
        ));
        assert!(parse_coloring(&e, &l, "e1=r x=g / x=b").is_ok());
        assert!(matches!(
            parse_coloring(&e, &l, "e1=q"),
            Err(ColoringError::UnknownColor(_))
        ));
        assert!(matches!(
            parse_coloring(&e, &l, "e1"),
            Err(ColoringError::Syntax(_))
        ));
        assert!(matches!(
            parse_coloring(&e, &l, "e1=r e1=g"),
            Err(ColoringError::Duplicate(_))
        ));
        assert!(matches!(
            parse_coloring(&e, &l, "zz=r"),
            Err(ColoringError::UnknownId(_))
        ));
    }

    #[test]
    fn coords_sidecar() {
        let c = parse_coords("# theta\na -1 0\nb 1 0\nbend e1 0 1\n").unwrap();
        assert_eq!(c.vertices["a"], (-1.0, 0.0));
        assert_eq!(c.bends["e1"], vec![(0.0, 1.0)]);
        assert!(parse_coords("a 1").is_err());
    }
}
