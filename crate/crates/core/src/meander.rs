//! Meander graphs of seaweeds in `sl_n`, an independent route to the index in
//! type A.
//!
//! A pair of compositions `a`, `b` of `n` gives arcs on the points `1..n`:
//! inside each block of `a` (drawn above) and of `b` (drawn below), the i-th
//! point of the block is joined to the i-th point from the end. With `C`
//! cycles and `P` paths (isolated points included) the index in `sl_n` is
//! `2C + P - 1`.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Subset, TypeLetter};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompositionPair {
    pub n: usize,
    pub a: Vec<usize>,
    pub b: Vec<usize>,
}

impl CompositionPair {
    pub fn new(a: Vec<usize>, b: Vec<usize>) -> Result<Self> {
        let n: usize = a.iter().sum();
        if a.iter().chain(&b).any(|&x| x == 0) {
            return Err(Error::InvalidComposition("parts must be positive".into()));
        }
        if b.iter().sum::<usize>() != n {
            return Err(Error::InvalidComposition(format!(
                "{a:?} and {b:?} do not sum to the same n"
            )));
        }
        if n < 2 {
            return Err(Error::InvalidComposition("n must be at least 2".into()));
        }
        Ok(CompositionPair { n, a, b })
    }

    /// Parts joined by `+`, e.g. `2+1`.
    pub fn describe(parts: &[usize]) -> String {
        parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join("+")
    }
}

/// Blocks of `{1..n}` cut wherever a simple root is missing from `s`.
fn blocks(n: usize, s: Subset) -> Vec<usize> {
    let mut parts = Vec::new();
    let mut size = 1;
    for i in 1..n {
        if s.contains(i) {
            size += 1;
        } else {
            parts.push(size);
            size = 1;
        }
    }
    parts.push(size);
    parts
}

pub fn compositions_from_subsets(rs: &RootSystem, s: Subset, t: Subset) -> Result<CompositionPair> {
    if rs.simple_type().letter() != TypeLetter::A {
        return Err(Error::NotTypeA(rs.simple_type().to_string()));
    }
    let n = rs.rank() + 1;
    CompositionPair::new(blocks(n, s), blocks(n, t))
}

/// Arc diagram on `0..n` (0-based internally).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeanderGraph {
    pub n: usize,
    pub top: Vec<(usize, usize)>,
    pub bottom: Vec<(usize, usize)>,
}

fn arcs(parts: &[usize]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut offset = 0;
    for &k in parts {
        for i in 0..k / 2 {
            out.push((offset + i, offset + k - 1 - i));
        }
        offset += k;
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentCounts {
    pub cycles: usize,
    pub paths: usize,
}

impl MeanderGraph {
    pub fn new(cp: &CompositionPair) -> Self {
        MeanderGraph {
            n: cp.n,
            top: arcs(&cp.a),
            bottom: arcs(&cp.b),
        }
    }

    /// Cycles and paths; a component is a cycle iff it has as many edges as
    /// vertices (every vertex has degree at most 2).
    pub fn components(&self) -> ComponentCounts {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in self.top.iter().chain(&self.bottom) {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.n];
        let mut counts = ComponentCounts { cycles: 0, paths: 0 };
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let (mut vertices, mut degree_sum) = (0, 0);
            while let Some(v) = stack.pop() {
                vertices += 1;
                degree_sum += adj[v].len();
                for &w in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            if degree_sum / 2 == vertices {
                counts.cycles += 1;
            } else {
                counts.paths += 1;
            }
        }
        counts
    }

    /// Arc diagram as a standalone SVG document.
    pub fn to_svg(&self) -> String {
        const STEP: usize = 40;
        const MARGIN: usize = 30;
        let width = 2 * MARGIN + STEP * (self.n - 1);
        let half = STEP * self.n / 2 + 10;
        let height = 2 * half;
        let x = |i: usize| MARGIN + STEP * i;
        let mut svg = String::new();
        let _ = writeln!(
            svg,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
        );
        let _ = writeln!(svg, r#"<g fill="none" stroke="black" stroke-width="2">"#);
        for (arcs, sweep) in [(&self.top, 1), (&self.bottom, 0)] {
            for &(u, v) in arcs.iter() {
                let r = (x(v) - x(u)) / 2;
                let _ = writeln!(
                    svg,
                    r#"<path d="M {} {half} A {r} {r} 0 0 {sweep} {} {half}"/>"#,
                    x(u),
                    x(v)
                );
            }
        }
        let _ = writeln!(svg, "</g>");
        for i in 0..self.n {
            let _ = writeln!(svg, r#"<circle cx="{}" cy="{half}" r="4" fill="black"/>"#, x(i));
        }
        svg.push_str("</svg>\n");
        svg
    }
}

/// Index of the seaweed of `sl_n` given by a composition pair.
pub fn meander_index_sl(cp: &CompositionPair) -> usize {
    let c = MeanderGraph::new(cp).components();
    2 * c.cycles + c.paths - 1
}
