//! Text formats for H-representations, V-representations and incidence
//! matrices.
//!
//! ```text
//! polybound-hrep 1
//! dim 2 rows 2
//! -1 0 0
//! 0 -1 0
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::exact::{parse_rational, Rational};
use crate::polyhedron::{HRep, IncidenceMatrix, Inequality, VRep};
use crate::set::VertexSet;

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Self { inner: text.lines().enumerate() }
    }

    /// Next line with its 1-based number.
    fn next(&mut self, what: &str) -> Result<(usize, &'a str)> {
        match self.inner.next() {
            Some((i, l)) => Ok((i + 1, l.trim())),
            None => Err(Error::parse(0, format!("unexpected end of input, expected {what}"))),
        }
    }

    fn finish(mut self) -> Result<()> {
        for (i, l) in self.inner.by_ref() {
            if !l.trim().is_empty() {
                return Err(Error::parse(i + 1, "trailing content"));
            }
        }
        Ok(())
    }
}

fn header(lines: &mut Lines, magic: &str) -> Result<()> {
    let (n, l) = lines.next("header")?;
    if l != format!("{magic} 1") {
        return Err(Error::parse(n, format!("expected header \"{magic} 1\"")));
    }
    Ok(())
}

/// Parses `key1 <n1> key2 <n2> …`.
fn keyed(line: (usize, &str), keys: &[&str]) -> Result<Vec<usize>> {
    let (n, l) = line;
    let words: Vec<&str> = l.split_whitespace().collect();
    if words.len() != 2 * keys.len() {
        return Err(Error::parse(n, format!("expected \"{}\"", keys.join(" <n> "))));
    }
    keys.iter()
        .enumerate()
        .map(|(k, key)| {
            if words[2 * k] != *key {
                return Err(Error::parse(n, format!("expected \"{key}\"")));
            }
            words[2 * k + 1].parse().map_err(|_| Error::parse(n, format!("bad count for {key}")))
        })
        .collect()
}

fn rationals(line: (usize, &str), count: usize) -> Result<Vec<Rational>> {
    let (n, l) = line;
    let vals: Vec<Rational> = l
        .split_whitespace()
        .map(|w| parse_rational(w).ok_or_else(|| Error::parse(n, format!("bad number {w:?}"))))
        .collect::<Result<_>>()?;
    if vals.len() != count {
        return Err(Error::parse(n, format!("expected {count} numbers, found {}", vals.len())));
    }
    Ok(vals)
}

fn join(v: &[Rational]) -> String {
    v.iter().map(Rational::to_string).collect::<Vec<_>>().join(" ")
}

pub fn parse_hrep(text: &str) -> Result<HRep> {
    let mut lines = Lines::new(text);
    header(&mut lines, "polybound-hrep")?;
    let dims = keyed(lines.next("dimensions")?, &["dim", "rows"])?;
    let (d, m) = (dims[0], dims[1]);
    let mut rows = Vec::with_capacity(m);
    for _ in 0..m {
        let mut v = rationals(lines.next("row")?, d + 1)?;
        let b = v.pop().expect("d + 1 entries");
        rows.push(Inequality::new(v, b));
    }
    lines.finish()?;
    HRep::new(d, rows)
}

pub fn write_hrep(h: &HRep) -> String {
    let mut s = format!("polybound-hrep 1\ndim {} rows {}\n", h.dim(), h.len());
    for r in h.rows() {
        let _ = writeln!(s, "{} {}", join(&r.a), r.b);
    }
    s
}

pub fn parse_vrep(text: &str) -> Result<VRep> {
    let mut lines = Lines::new(text);
    header(&mut lines, "polybound-vrep")?;
    let d = keyed(lines.next("dimension")?, &["dim"])?[0];
    let k = keyed(lines.next("vertex count")?, &["vertices"])?[0];
    let vertices = (0..k).map(|_| rationals(lines.next("vertex")?, d)).collect::<Result<Vec<_>>>()?;
    let r = keyed(lines.next("ray count")?, &["rays"])?[0];
    let rays = (0..r).map(|_| rationals(lines.next("ray")?, d)).collect::<Result<Vec<_>>>()?;
    lines.finish()?;
    Ok(VRep::new(d, vertices, rays))
}

pub fn write_vrep(v: &VRep) -> String {
    let mut s = format!("polybound-vrep 1\ndim {}\nvertices {}\n", v.dim, v.vertices.len());
    for x in &v.vertices {
        let _ = writeln!(s, "{}", join(x));
    }
    let _ = writeln!(s, "rays {}", v.rays.len());
    for x in &v.rays {
        let _ = writeln!(s, "{}", join(x));
    }
    s
}

pub fn parse_incidences(text: &str) -> Result<IncidenceMatrix> {
    let mut lines = Lines::new(text);
    header(&mut lines, "polybound-inc")?;
    let dims = keyed(lines.next("dimensions")?, &["facets", "vertices"])?;
    let (m, n) = (dims[0], dims[1]);
    let mut rows = Vec::with_capacity(m);
    for _ in 0..m {
        let (ln, l) = lines.next("incidence row")?;
        if l.len() != n || !l.bytes().all(|b| b == b'0' || b == b'1') {
            return Err(Error::parse(ln, format!("expected {n} characters from {{0,1}}")));
        }
        rows.push(VertexSet::from_indices(n, l.bytes().enumerate().filter(|(_, b)| *b == b'1').map(|(i, _)| i)));
    }
    let mut far = None;
    for (i, l) in lines.inner.by_ref() {
        let l = l.trim();
        if l.is_empty() {
            continue;
        }
        let mut words = l.split_whitespace();
        if far.is_some() || words.next() != Some("farface") {
            return Err(Error::parse(i + 1, "trailing content"));
        }
        let idx = words
            .map(|w| match w.parse::<usize>() {
                Ok(v) if v < n => Ok(v),
                _ => Err(Error::parse(i + 1, format!("bad vertex index {w:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        far = Some(VertexSet::from_indices(n, idx));
    }
    let inc = IncidenceMatrix::new(n, rows)?;
    match far {
        Some(f) => inc.with_far_face(f),
        None => Ok(inc),
    }
}

pub fn write_incidences(inc: &IncidenceMatrix) -> String {
    let mut s = format!("polybound-inc 1\nfacets {} vertices {}\n", inc.m(), inc.n());
    for r in inc.rows() {
        s.extend((0..inc.n()).map(|v| if r.contains(v) { '1' } else { '0' }));
        s.push('\n');
    }
    if let Some(f) = inc.far_face() {
        s.push_str("farface");
        for v in f.iter() {
            let _ = write!(s, " {v}");
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{frac, rat};

    #[test]
    fn hrep_round_trip() {
        let text = "polybound-hrep 1\ndim 2 rows 2\n-1 0 0\n1/2 -1 3/4\n";
        let h = parse_hrep(text).unwrap();
        assert_eq!(h.rows()[1].a, vec![frac(1, 2), rat(-1)]);
        assert_eq!(write_hrep(&h), text);
    }

    #[test]
    fn hrep_errors() {
        assert!(matches!(parse_hrep("polybound-hrep 2\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_hrep("polybound-hrep 1\ndim 2 rows 1\n1 2\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_hrep("polybound-hrep 1\ndim 1 rows 1\n1 x\n"), Err(Error::Parse { line: 3, .. })));
    }

    #[test]
    fn vrep_round_trip() {
        let text = "polybound-vrep 1\ndim 2\nvertices 1\n0 0\nrays 2\n0 1\n1 0\n";
        assert_eq!(write_vrep(&parse_vrep(text).unwrap()), text);
    }

    #[test]
    fn incidence_round_trip() {
        let text = "polybound-inc 1\nfacets 2 vertices 3\n110\n011\nfarface 2\n";
        let inc = parse_incidences(text).unwrap();
        assert_eq!(inc.far_face().unwrap().to_vec(), vec![2]);
        assert_eq!(write_incidences(&inc), text);
        let plain = "polybound-inc 1\nfacets 1 vertices 2\n11\n";
        assert!(parse_incidences(plain).unwrap().far_face().is_none());
        assert!(parse_incidences("polybound-inc 1\nfacets 1 vertices 2\n12\n").is_err());
    }
}
