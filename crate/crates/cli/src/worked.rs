//! Replays the two worked examples: the five-element subreduct of `Ł₂×Ł₂`
//! and the subreducts A, B, C of `Ł₂×Ł₂×Ł₃`.

use std::fmt::Write as _;

use serde_json::{json, Value};

use mvlat::algebra::FinAlgebra;
use mvlat::ideal::{max_le, maximal_ideals, Ideal};
use mvlat::order::{are_compatible, hom_poset, is_h_complete, H_COMPLETE_LIMIT};
use mvlat::samples;

use crate::commands::member_labels;
use crate::{Format, Report, Result};

pub const GOLDENS: [(&str, &str); 4] = [
    ("homs_a.dot", include_str!("../fixtures/homs_a.dot")),
    ("max_le_a.dot", include_str!("../fixtures/max_le_a.dot")),
    ("homs_c.dot", include_str!("../fixtures/homs_c.dot")),
    ("max_le_c.dot", include_str!("../fixtures/max_le_c.dot")),
];

/// `old → new` so that new index `k` is the `k`-th coordinate.
fn by_coordinate(n: usize, coordinate_of: impl Fn(usize) -> usize) -> Vec<usize> {
    (0..n).map(coordinate_of).collect()
}

/// Hom `i` of a tuple subreduct is the projection on coordinate `k`.
fn projection_of(a: &FinAlgebra, h: &mvlat::algebra::Hom) -> usize {
    let width = a.chains().len();
    (0..width)
        .find(|&k| (0..a.len()).all(|x| *h.value(x) == a.tuple(x).expect("tuples")[k]))
        .expect("homs of these examples are projections")
}

/// Maximal ideal of a product that is the kernel of projection `k`.
fn kernel_coordinate(b: &FinAlgebra, m: &Ideal) -> usize {
    let width = b.chains().len();
    (0..width)
        .find(|&k| m.members().iter().all(|&x| b.tuple(x).expect("tuples")[k].is_zero()))
        .expect("maximal ideals of a product are kernels of projections")
}

fn one_based(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|k| format!("{prefix}{k}")).collect()
}

pub fn hom_diagram(name: &str, a: &FinAlgebra) -> Result<String> {
    let hp = hom_poset(a)?;
    let perm = by_coordinate(hp.len(), |i| projection_of(a, &hp.homs[i]));
    let ids = one_based("f", hp.len());
    Ok(hp.order.relabel(&perm).to_dot_with_ids(name, &ids, &ids))
}

pub fn trace_diagram(name: &str, a: &FinAlgebra, b: &FinAlgebra) -> Result<String> {
    let t = max_le(a, b)?;
    let perm = by_coordinate(t.traces.len(), |i| kernel_coordinate(b, &t.ambient_maximal[i]));
    let mut ordered = t.traces.clone();
    for (old, &new) in perm.iter().enumerate() {
        ordered[new] = t.traces[old].clone();
    }
    let ids = one_based("I", ordered.len());
    let labels: Vec<String> = ordered
        .iter()
        .zip(&ids)
        .map(|(i, id)| format!("{id} = {{{}}}", member_labels(a, i).join(", ")))
        .collect();
    Ok(t.order.relabel(&perm).to_dot_with_ids(name, &ids, &labels))
}

pub fn diagrams() -> Result<Vec<String>> {
    let e = FinAlgebra::full_product(&[2, 2, 3])?;
    let (a, c) = (samples::l223_a(), samples::l223_c());
    Ok(vec![
        hom_diagram("H_A", &a)?,
        trace_diagram("Max_A", &a, &e)?,
        hom_diagram("H_C", &c)?,
        trace_diagram("Max_C", &c, &e)?,
    ])
}

struct Checks {
    lines: Vec<(String, bool)>,
}

impl Checks {
    fn add(&mut self, name: &str, ok: bool) {
        self.lines.push((name.to_string(), ok));
    }
}

fn labels(a: &FinAlgebra, ideals: &[Ideal]) -> Vec<Vec<String>> {
    let mut v: Vec<Vec<String>> = ideals.iter().map(|i| member_labels(a, i)).collect();
    v.sort();
    v
}

fn strings(items: &[&[&str]]) -> Vec<Vec<String>> {
    let mut v: Vec<Vec<String>> = items
        .iter()
        .map(|s| s.iter().map(|x| x.to_string()).collect())
        .collect();
    v.sort();
    v
}

fn small_example(checks: &mut Checks) -> Result<()> {
    let full = FinAlgebra::full_product(&[2, 2])?;
    let maximal = maximal_ideals(&full)?;
    checks.add(
        "max ideals of Ł2×Ł2",
        labels(&full, &maximal) == strings(&[&["(0,0)", "(0,1/2)", "(0,1)"], &["(0,0)", "(1/2,0)", "(1,0)"]]),
    );
    let a = samples::l2x2_positive();
    let hp = hom_poset(&a)?;
    let f: Vec<usize> = hp.homs.iter().map(|h| projection_of(&a, h)).collect();
    let chain = hp.len() == 2 && {
        let (f1, f2) = (f.iter().position(|&k| k == 0), f.iter().position(|&k| k == 1));
        matches!((f1, f2), (Some(i), Some(j)) if hp.order.holds(i, j) && !hp.order.holds(j, i))
    };
    checks.add("homs of the 5-element subreduct: f1 < f2", chain);
    let t = max_le(&a, &full)?;
    let by_k: Vec<usize> = t
        .ambient_maximal
        .iter()
        .map(|m| kernel_coordinate(&full, m))
        .collect();
    let i1 = &t.traces[by_k.iter().position(|&k| k == 0).expect("two ideals")];
    let i2 = &t.traces[by_k.iter().position(|&k| k == 1).expect("two ideals")];
    checks.add(
        "traces: I2 = {(0,0)} strictly inside I1",
        member_labels(&a, i2) == ["(0,0)"] && i2.is_subset_of(i1) && i2 != i1,
    );
    Ok(())
}

fn large_example(checks: &mut Checks) -> Result<()> {
    let e = FinAlgebra::full_product(&[2, 2, 3])?;
    let (a, b, c) = (samples::l223_a(), samples::l223_b(), samples::l223_c());
    checks.add("A and B compatible", are_compatible(&a, &b, &e)?);
    checks.add("A and C not compatible", !are_compatible(&a, &c, &e)?);
    checks.add("B and C not compatible", !are_compatible(&b, &c, &e)?);
    let ha = is_h_complete(&a, &e, H_COMPLETE_LIMIT)?;
    checks.add(
        "A not H-complete, enlarged to B",
        !ha.complete && ha.certificate.as_ref() == Some(&b),
    );
    checks.add("B H-complete", is_h_complete(&b, &e, H_COMPLETE_LIMIT)?.complete);
    checks.add("C H-complete", is_h_complete(&c, &e, H_COMPLETE_LIMIT)?.complete);
    Ok(())
}

pub fn run() -> Result<Report> {
    let mut checks = Checks { lines: Vec::new() };
    small_example(&mut checks)?;
    large_example(&mut checks)?;
    let produced = diagrams()?;
    let mut text = String::new();
    let mut diffs = serde_json::Map::new();
    for ((name, golden), dot) in GOLDENS.iter().zip(&produced) {
        let same = *golden == dot.as_str();
        checks.add(&format!("diagram {name} matches golden"), same);
        if !same {
            let _ = writeln!(text, "--- expected {name}\n{golden}+++ produced\n{dot}");
        }
        diffs.insert(name.to_string(), json!({ "matches": same, "produced": dot }));
    }
    let mut summary = String::new();
    for (name, ok) in &checks.lines {
        let _ = writeln!(summary, "{} {name}", if *ok { "ok  " } else { "FAIL" });
    }
    summary.push_str(&text);
    let passed = checks.lines.iter().all(|(_, ok)| *ok);
    let json = json!({
        "checks": checks.lines.iter().map(|(n, ok)| (n.clone(), Value::Bool(*ok))).collect::<serde_json::Map<_, _>>(),
        "diagrams": diffs,
    });
    let dot = produced.concat();
    Ok(Report::new(json, summary, passed).with_dot(dot).default_to(Format::Text))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagrams_match_goldens() {
        let produced = diagrams().unwrap();
        for ((name, golden), dot) in GOLDENS.iter().zip(&produced) {
            assert_eq!(*golden, dot, "{name}");
        }
    }

    #[test]
    fn relabelled_homs_follow_coordinates() {
        let a = samples::l223_a();
        let dot = hom_diagram("H_A", &a).unwrap();
        assert!(dot.contains("f1 -> f2;") && dot.contains("f3 -> f2;"));
    }
}
