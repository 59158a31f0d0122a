//! Text, CSV, JSON and SVG renderings.
//!
//! JSON documents carry `"schema": "eisring/v1"`. SVG output places `ρ` at
//! `(-1/2, √3/2)` with the y axis pointing up and 40 units per lattice step.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::codes::LinearCode;
use crate::constellation::{Constellation, TableRow, COLUMNS};
use crate::eisenstein::Eisenstein;
use crate::partition::PartitionNode;
use crate::quotient::{Modulus, ResidueSystem};

pub const SCHEMA: &str = "eisring/v1";
pub const SPACING: f64 = 40.0;

const PALETTE: [&str; 12] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf", "#393b79", "#637939",
];

/// `a+bρ` in the form used by codeword listings.
pub fn eis_string(x: Eisenstein) -> String {
    x.to_string()
}

pub fn residue_table_csv(rs: &ResidueSystem) -> String {
    let mut out = String::from("x,y,re_rep_a,re_rep_b\n");
    for (r, e) in rs.rows() {
        let _ = writeln!(out, "{},{},{},{}", r.a, r.b, e.a, e.b);
    }
    out
}

pub fn residue_table_text(rs: &ResidueSystem) -> String {
    let mut out = format!(
        "modulus {} = {}({}), {} classes\n",
        rs.modulus.eta,
        rs.modulus.t,
        rs.modulus.primitive_part(),
        rs.len()
    );
    let w = rs
        .rows()
        .map(|(r, _)| r.to_string().len())
        .max()
        .unwrap_or(1);
    for (r, e) in rs.rows() {
        let _ = writeln!(out, "{:>w$}  ->  {}", r.to_string(), e);
    }
    out
}

fn modulus_json(m: &Modulus) -> Value {
    json!({
        "eta": m.eta,
        "working_eta": m.working_eta,
        "t": m.t,
        "m": m.m,
        "n": m.n,
        "coprime_side": m.coprime_side,
        "kind": m.isomorphism_kind(),
        "size": m.size(),
    })
}

pub fn residue_table_json(rs: &ResidueSystem) -> Value {
    let rows: Vec<Value> = rs
        .rows()
        .map(|(r, e)| json!({ "grid": r, "rep": e }))
        .collect();
    json!({ "schema": SCHEMA, "modulus": modulus_json(&rs.modulus), "rows": rows })
}

pub fn energy_table_text(rows: &[TableRow]) -> String {
    let mut out = format!("{:<10} {:<10} {:>5}", "Gaussian", "Eisenstein", "size");
    for c in COLUMNS {
        let _ = write!(out, " {c:>8}");
    }
    out.push('\n');
    for r in rows {
        let _ = write!(
            out,
            "{:<10} {:<10} {:>5}",
            r.gaussian.to_string(),
            r.eisenstein.to_string(),
            r.size
        );
        for v in r.values() {
            let _ = write!(out, " {:>8}", v.fixed2());
        }
        out.push('\n');
    }
    out
}

pub fn energy_table_csv(rows: &[TableRow]) -> String {
    let mut out = String::from(
        "gaussian_a,gaussian_b,eisenstein_a,eisenstein_b,size,e_g,e_e,e2_g,e2_e,em_g,ehex_e\n",
    );
    for r in rows {
        let _ = write!(
            out,
            "{},{},{},{},{}",
            r.gaussian.a, r.gaussian.b, r.eisenstein.a, r.eisenstein.b, r.size
        );
        for v in r.values() {
            let _ = write!(out, ",{}", v.fixed2());
        }
        out.push('\n');
    }
    out
}

pub fn energy_table_json(rows: &[TableRow]) -> Value {
    json!({ "schema": SCHEMA, "columns": COLUMNS, "rows": rows })
}

pub fn partition_json(modulus: &Modulus, factors: &[u64], root: &PartitionNode) -> Value {
    json!({ "schema": SCHEMA, "modulus": modulus_json(modulus), "factors": factors, "tree": root })
}

pub fn partition_text(root: &PartitionNode) -> String {
    fn walk(n: &PartitionNode, out: &mut String) {
        let indent = "  ".repeat(n.label.len());
        let label: Vec<String> = n.label.iter().map(|i| i.to_string()).collect();
        let dist = |d: Option<u64>| d.map_or("inf".to_string(), |v| v.to_string());
        let _ = writeln!(
            out,
            "{indent}[{}] {} points, d2={}, dhex={}",
            label.join(","),
            n.points.len(),
            dist(n.min_d2),
            dist(n.min_dhex)
        );
        for c in &n.children {
            walk(c, out);
        }
    }
    let mut out = String::new();
    walk(root, &mut out);
    out
}

pub fn constellation_csv(c: &Constellation) -> String {
    let mut out = String::from("a,b,re,im\n");
    for ((a, b), (re, im)) in c.coefficient_pairs().into_iter().zip(c.complex_points()) {
        let _ = writeln!(out, "{a},{b},{re:.6},{im:.6}");
    }
    out
}

pub fn constellation_json(c: &Constellation) -> Value {
    json!({ "schema": SCHEMA, "constellation": c })
}

/// Codewords one per row, components as `a+bρ` strings.
pub fn codewords_csv(code: &LinearCode) -> String {
    let mut out = (0..code.length)
        .map(|i| format!("c{i}"))
        .collect::<Vec<_>>()
        .join(",");
    out.push('\n');
    for w in &code.codewords {
        let row: Vec<String> = w.iter().map(|&x| eis_string(x)).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

struct Dot {
    x: f64,
    y: f64,
    color: &'static str,
    title: String,
}

fn svg(title: &str, metadata: &str, dots: &[Dot]) -> String {
    let r = 6.0;
    let pad = SPACING;
    let (mut x0, mut x1, mut y0, mut y1) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for d in dots {
        x0 = x0.min(d.x);
        x1 = x1.max(d.x);
        y0 = y0.min(d.y);
        y1 = y1.max(d.y);
    }
    let (w, h) = (x1 - x0 + 2.0 * pad, y1 - y0 + 2.0 * pad);
    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.1}" height="{h:.1}" viewBox="{:.1} {:.1} {w:.1} {h:.1}">"#,
        x0 - pad,
        -y1 - pad
    );
    let _ = writeln!(out, "<title>{}</title>", xml_escape(title));
    let _ = writeln!(out, "<metadata>{}</metadata>", xml_escape(metadata));
    let _ = writeln!(
        out,
        r##"<line x1="{:.1}" y1="0" x2="{:.1}" y2="0" stroke="#cccccc"/>"##,
        x0 - pad,
        x1 + pad
    );
    let _ = writeln!(
        out,
        r##"<line x1="0" y1="{:.1}" x2="0" y2="{:.1}" stroke="#cccccc"/>"##,
        -y1 - pad,
        -y0 + pad
    );
    for d in dots {
        // SVG y grows downward, so flip it
        let _ = writeln!(
            out,
            r#"<circle cx="{:.3}" cy="{:.3}" r="{r}" fill="{}"><title>{}</title></circle>"#,
            d.x,
            -d.y,
            d.color,
            xml_escape(&d.title)
        );
    }
    out.push_str("</svg>\n");
    out
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn eis_xy(p: Eisenstein) -> (f64, f64) {
    let (re, im) = p.to_complex();
    (re * SPACING, im * SPACING)
}

pub fn constellation_svg(c: &Constellation) -> String {
    let dots: Vec<Dot> = match c {
        Constellation::Eisenstein { points, .. } => points
            .iter()
            .map(|&p| {
                let (x, y) = eis_xy(p);
                Dot {
                    x,
                    y,
                    color: PALETTE[0],
                    title: p.to_string(),
                }
            })
            .collect(),
        Constellation::Gaussian { points, .. } => points
            .iter()
            .map(|&p| Dot {
                x: p.a as f64 * SPACING,
                y: p.b as f64 * SPACING,
                color: PALETTE[0],
                title: p.to_string(),
            })
            .collect(),
    };
    let name = match c {
        Constellation::Eisenstein { modulus, .. } => {
            format!("Eisenstein constellation mod {modulus}")
        }
        Constellation::Gaussian { modulus, .. } => format!("Gaussian constellation mod {modulus}"),
    };
    let meta = json!({ "schema": SCHEMA, "size": c.size() }).to_string();
    svg(&name, &meta, &dots)
}

/// Points colored by top-level coset; certified distances go in the metadata.
pub fn partition_svg(modulus: &Modulus, factors: &[u64], root: &PartitionNode) -> String {
    let mut dots = Vec::new();
    let groups: Vec<&PartitionNode> = if root.children.is_empty() {
        vec![root]
    } else {
        root.children.iter().collect()
    };
    for (i, g) in groups.iter().enumerate() {
        for &p in &g.points {
            let (x, y) = eis_xy(p);
            dots.push(Dot {
                x,
                y,
                color: PALETTE[i % PALETTE.len()],
                title: format!("{p} coset {i}"),
            });
        }
    }
    let cosets: Vec<Value> = groups
        .iter()
        .map(|g| json!({ "label": g.label, "size": g.points.len(), "min_d2": g.min_d2, "min_dhex": g.min_dhex }))
        .collect();
    let meta =
        json!({ "schema": SCHEMA, "modulus": modulus.eta, "factors": factors, "cosets": cosets })
            .to_string();
    svg(&format!("Partition of E mod {}", modulus.eta), &meta, &dots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::recursive_partition;

    #[test]
    fn residue_csv_header_and_rows() {
        let rs = Modulus::new(Eisenstein::new(1, 0))
            .unwrap()
            .residue_system();
        assert_eq!(residue_table_csv(&rs), "x,y,re_rep_a,re_rep_b\n0,0,0,0\n");
        let v = residue_table_json(&rs);
        assert_eq!(v["schema"], SCHEMA);
    }

    #[test]
    fn svg_places_rho_up_and_left() {
        let (x, y) = eis_xy(Eisenstein::new(0, 1));
        assert!((x + 20.0).abs() < 1e-9);
        assert!((y - 20.0 * 3f64.sqrt()).abs() < 1e-9);
        let m = Modulus::new(Eisenstein::new(6, 0)).unwrap();
        let root = recursive_partition(&m, &[2]).unwrap();
        let s = partition_svg(&m, &[2], &root);
        assert!(s.starts_with("<?xml"));
        assert_eq!(s.matches("<circle").count(), 36);
        assert!(s.contains(PALETTE[3]));
    }
}
