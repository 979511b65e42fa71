//! Graphviz export of cylindric orthoframes.

use crate::error::Result;
use crate::frames::CylindricOrthoFrame;
use crate::io::write_atomic;
use std::fmt::Write;
use std::path::Path;

const COLORS: [&str; 6] = ["blue", "red", "darkgreen", "orange", "purple", "brown"];

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct DotOptions {
    /// Draw `x R_i x` loops.
    pub loops: bool,
    /// Fill the nodes of `Δ_{i,k}`.
    pub delta: Option<(usize, usize)>,
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Orthogonality as undirected solid edges (each pair once), `R_i` as dashed
/// arrows with one color per dimension.
pub fn to_dot(f: &CylindricOrthoFrame, opts: &DotOptions) -> String {
    let mut out = String::from("digraph frame {\n  node [shape=ellipse];\n");
    let delta = opts.delta.filter(|&(i, k)| i < f.dims() && k < f.dims());
    for p in 0..f.len() {
        let filled = delta.is_some_and(|(i, k)| f.delta(i, k).contains(p));
        let style = if filled { ", style=filled, fillcolor=lightgrey" } else { "" };
        let _ = writeln!(out, "  p{p} [label={}{style}];", quote(&f.label(p)));
    }
    for p in 0..f.len() {
        for q in p + 1..f.len() {
            if f.perp().contains(p, q) || f.perp().contains(q, p) {
                let _ = writeln!(out, "  p{p} -> p{q} [dir=none];");
            }
        }
    }
    for (i, r) in f.rels().iter().enumerate() {
        let color = COLORS[i % COLORS.len()];
        for p in 0..f.len() {
            for q in r.successors(p).ones() {
                if p == q && !opts.loops {
                    continue;
                }
                let _ = writeln!(out, "  p{p} -> p{q} [style=dashed, color={color}, label=\"R{i}\"];");
            }
        }
    }
    out.push_str("}\n");
    out
}

pub fn export_dot(f: &CylindricOrthoFrame, path: impl AsRef<Path>, opts: &DotOptions) -> Result<()> {
    write_atomic(path, to_dot(f, opts).as_bytes())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{boolean_algebra, with_simple_quantifiers};
    use crate::frames::maclaren_frame;
    use crate::limits::Limits;
    use crate::transforms::qca_to_cqia;

    fn b2_frame(d: usize) -> CylindricOrthoFrame {
        let lim = Limits::default();
        let a = with_simple_quantifiers(&boolean_algebra(2, &lim).unwrap(), d).unwrap();
        maclaren_frame(&qca_to_cqia(&a).unwrap(), &lim).unwrap()
    }

    #[test]
    fn b2_maclaren_graph() {
        let dot = to_dot(&b2_frame(1), &DotOptions::default());
        assert_eq!(dot.matches("[label=").count(), 3);
        assert_eq!(dot.matches("dir=none").count(), 1);
        assert!(dot.contains("p0 -> p1 [dir=none]"));
        assert!(!dot.contains("p0 -> p0"));
        let with_loops = to_dot(&b2_frame(1), &DotOptions { loops: true, delta: None });
        assert!(with_loops.contains("p0 -> p0 [style=dashed"));
    }

    #[test]
    fn no_dims_no_dashes() {
        assert!(!to_dot(&b2_frame(0), &DotOptions::default()).contains("dashed"));
    }

    #[test]
    fn delta_fill_and_determinism() {
        let f = b2_frame(2);
        let opts = DotOptions { loops: false, delta: Some((0, 1)) };
        let a = to_dot(&f, &opts);
        assert_eq!(a, to_dot(&f, &opts));
        // Δ_{0,1} = ψ(1) is every point
        assert_eq!(a.matches("fillcolor").count(), 3);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("f.dot");
        export_dot(&f, &path, &opts).unwrap();
        assert_eq!(std::fs::read_to_string(&path).unwrap(), a);
    }
}
