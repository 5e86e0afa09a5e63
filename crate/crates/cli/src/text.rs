use std::fmt::Write as _;

use crate::report::{
    AnalysisReport, BrauerOutput, BuiltinEntry, CharacterReport, CheckReport, ComplexPair, ErrorOutput, GradingOutput,
    KernelOutput, ModularOutput, Output, ValidationOutput,
};

const SHOW_TOL: f64 = 1e-9;

pub fn render(output: &Output) -> String {
    match output {
        Output::Validation(v) => validation(v),
        Output::Analysis(a) => analysis(a),
        Output::Characters(c) => {
            let mut s = format!("ring {}\n", c.ring);
            table(&mut s, &c.labels, &c.characters);
            s
        }
        Output::Kernel(k) => kernel(k),
        Output::Grading(g) => grading(g),
        Output::Brauer(b) => brauer(b),
        Output::Modular(m) => modular(m),
        Output::Builtins(list) => builtins(list),
        Output::Error(e) => error(e),
    }
}

pub fn real(x: f64) -> String {
    if (x - x.round()).abs() < SHOW_TOL {
        let r = x.round();
        return format!("{}", if r == 0.0 { 0.0 } else { r });
    }
    let s = format!("{x:.6}");
    s.trim_end_matches('0').to_string()
}

pub fn complex([re, im]: ComplexPair) -> String {
    if im.abs() < SHOW_TOL {
        return real(re);
    }
    let sign = if im < 0.0 { '-' } else { '+' };
    let mag = if (im.abs() - 1.0).abs() < SHOW_TOL {
        String::new()
    } else {
        real(im.abs())
    };
    if re.abs() < SHOW_TOL {
        let lead = if im < 0.0 { "-" } else { "" };
        return format!("{lead}{mag}i");
    }
    format!("{}{sign}{mag}i", real(re))
}

fn braces(items: &[String]) -> String {
    format!("{{{}}}", items.join(", "))
}

fn validation(v: &ValidationOutput) -> String {
    if v.valid {
        return format!("{}: valid\n", v.ring);
    }
    let mut s = format!("{}: invalid, {} violations\n", v.ring, v.violations.len());
    for viol in &v.violations {
        let _ = writeln!(s, "  {} at ({})", viol.axiom, viol.witness.join(", "));
    }
    s
}

fn table(s: &mut String, labels: &[String], chars: &[CharacterReport]) {
    let cells: Vec<Vec<String>> = chars
        .iter()
        .map(|c| c.values.iter().map(|&z| complex(z)).collect())
        .collect();
    let name_w = chars.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let widths: Vec<usize> = (0..labels.len())
        .map(|j| {
            cells
                .iter()
                .map(|row| row[j].chars().count())
                .chain([labels[j].chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let _ = write!(s, "  {:name_w$}", "");
    for (l, w) in labels.iter().zip(&widths) {
        let _ = write!(s, "  {l:>w$}");
    }
    s.push_str("  codegree\n");
    for (c, row) in chars.iter().zip(&cells) {
        let _ = write!(s, "  {:name_w$}", c.name);
        for (v, w) in row.iter().zip(&widths) {
            let _ = write!(s, "  {v:>w$}");
        }
        let _ = writeln!(s, "  {}", real(c.codegree));
    }
}

fn checks(s: &mut String, list: &[CheckReport]) {
    for c in list {
        let verdict = if c.passed { "PASS" } else { "FAIL" };
        if c.passed {
            let _ = writeln!(s, "  {verdict} {}", c.name);
        } else {
            let _ = writeln!(s, "  {verdict} {}: {}", c.name, c.detail);
        }
    }
}

fn components(parts: &[Vec<String>]) -> String {
    parts
        .iter()
        .enumerate()
        .map(|(a, d)| format!("D_{a} = {}", braces(d)))
        .collect::<Vec<_>>()
        .join(", ")
}

fn analysis(a: &AnalysisReport) -> String {
    let r = &a.ring;
    let mut s = format!(
        "ring {}: rank {}, {}, FPdim = {}\n",
        r.name,
        r.rank,
        if r.commutative { "commutative" } else { "noncommutative" },
        real(r.global_dim)
    );
    for note in &a.notices {
        let _ = writeln!(s, "note: {note}");
    }
    s.push_str("simples:\n");
    for b in &a.simples {
        let _ = write!(
            s,
            "  {}: FPdim {}, dual {}, {}",
            b.label,
            real(b.fp_dim),
            b.dual,
            if b.faithful { "faithful" } else { "not faithful" }
        );
        if let (Some(k), Some(z)) = (&b.kernel, &b.center) {
            let _ = write!(s, ", kernel {}, center {}", braces(k), braces(z));
        }
        let _ = writeln!(s, ", ind {}, order {}", b.index, b.order);
        let _ = writeln!(s, "    grading ({}): {}", b.grading_cross_check, components(&b.grading));
    }
    if let Some(chars) = &a.characters {
        s.push_str("characters:\n");
        table(&mut s, &r.labels, chars);
    }
    if !a.checks.is_empty() {
        s.push_str("checks:\n");
        checks(&mut s, &a.checks);
    }
    let _ = writeln!(s, "verdict: {}", if a.passed { "PASS" } else { "FAIL" });
    s
}

fn kernel(k: &KernelOutput) -> String {
    format!(
        "{} in {}: {}, kernel {}{}, center {}\n",
        k.object,
        k.ring,
        if k.faithful { "faithful" } else { "not faithful" },
        braces(&k.kernel),
        if k.trivial_kernel { " (trivial)" } else { "" },
        braces(&k.center)
    )
}

fn grading(g: &GradingOutput) -> String {
    let mut s = format!(
        "{} in {}: ind {}, order {}, cross-check {}\n",
        g.object, g.ring, g.index, g.order, g.cross_check
    );
    let _ = writeln!(s, "  {}", components(&g.components));
    s
}

fn brauer(b: &BrauerOutput) -> String {
    let mut s = format!(
        "{} in {}: kernel {}, cap {}\n",
        b.object,
        b.ring,
        if b.trivial_kernel { "trivial" } else { "nontrivial" },
        b.cap
    );
    for e in &b.exponents {
        let _ = writeln!(s, "  {} first in power {}", e.label, e.exponent);
    }
    if !b.missing.is_empty() {
        let _ = writeln!(s, "  never reached: {}", braces(&b.missing));
    }
    s
}

fn modular(m: &ModularOutput) -> String {
    let mut s = format!(
        "modular data for {}: S·conj(S) = {}·I, Verlinde round trip {}\n",
        m.ring,
        real(m.global_dim),
        if m.verlinde_roundtrip { "ok" } else { "FAILED" }
    );
    let _ = writeln!(s, "  invertibles {}", braces(&m.invertibles));
    for c in &m.centralizers {
        let _ = writeln!(
            s,
            "  {}: centralizer {}, projective centralizer {}{}",
            c.object,
            braces(&c.centralizer),
            braces(&c.projective_centralizer),
            if c.faithful { ", faithful" } else { "" }
        );
    }
    s.push_str("checks:\n");
    checks(&mut s, &m.checks);
    let _ = writeln!(s, "verdict: {}", if m.passed { "PASS" } else { "FAIL" });
    s
}

fn builtins(list: &[BuiltinEntry]) -> String {
    let w = list.iter().map(|b| b.name.len()).max().unwrap_or(0);
    let mut s = String::new();
    for b in list {
        let m = if b.modular { "  modular" } else { "" };
        let _ = writeln!(s, "{:w$}  rank {:>2}{m}", b.name, b.rank);
    }
    s
}

fn error(e: &ErrorOutput) -> String {
    format!("{}: {}: {}\n", e.ring, e.error.kind, e.error.message)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numbers() {
        assert_eq!(real(2.0), "2");
        assert_eq!(real(-0.0), "0");
        assert_eq!(real(2f64.sqrt()), "1.414214");
        assert_eq!(real(0.5), "0.5");
        assert_eq!(complex([1.0, 0.0]), "1");
        assert_eq!(complex([-0.5, 0.8660254037844386]), "-0.5+0.866025i");
        assert_eq!(complex([0.0, -1.0]), "-i");
        assert_eq!(complex([0.0, 2.0]), "2i");
    }
}
