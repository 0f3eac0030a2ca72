use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde_json::{json, Value};

use mvlat::algebra::{check_axioms, enumerate_homs, FinAlgebra};
use mvlat::duality::{check_duality, check_duality_space, clop_up, stone_compare as compare, upsilon};
use mvlat::ideal::{max_le as traces, maximal_ideals, Ideal};
use mvlat::mvtop::{FuzzySubset, MVTopology};
use mvlat::order::{compare_traces, compat_relation, is_h_complete, HomPoset};
use mvlat::poset::Relation;
use mvlat::term::synthesize_separator;
use mvlat::{samples, UnitRational};

use crate::input::Input;
use crate::{CliError, Context, Diagram, Format, Report, Result};

fn strict_pairs(r: &Relation) -> Vec<(usize, usize)> {
    r.pairs().into_iter().filter(|(i, j)| i != j).collect()
}

/// Members of an ideal as element labels, in element order.
pub fn member_labels(a: &FinAlgebra, ideal: &Ideal) -> Vec<String> {
    let mut elems: Vec<_> = ideal.members().iter().map(|&i| a.element(i).clone()).collect();
    elems.sort();
    elems.iter().map(ToString::to_string).collect()
}

fn fuzzy_json(points: &[String], f: &FuzzySubset) -> BTreeMap<String, String> {
    points.iter().cloned().zip(f.values().iter().map(ToString::to_string)).collect()
}

fn fuzzy_text(f: &FuzzySubset) -> String {
    let v: Vec<String> = f.values().iter().map(ToString::to_string).collect();
    format!("[{}]", v.join(", "))
}

fn order_text(out: &mut String, r: &Relation, ids: &[String]) {
    for (i, j) in r.hasse_edges() {
        let _ = writeln!(out, "{} < {}", ids[i], ids[j]);
    }
}

fn hom_ids(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("f{i}")).collect()
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report serializes")
}

fn space_value(x: &MVTopology) -> Value {
    serde_json::from_str(&x.to_json()).expect("space json parses")
}

pub fn check(ctx: &Context) -> Result<Report> {
    match ctx.single()? {
        Input::Algebra(a) => {
            let report = check_axioms(&a);
            let mut text = format!("{} elements, signature {}\n", a.len(), a.signature());
            let _ = writeln!(text, "{} law instances checked", report.instances_checked);
            for law in report.failed_laws() {
                let _ = writeln!(text, "fails: {law}");
            }
            Ok(Report::new(to_value(&report), text, report.passed()))
        }
        Input::Space(x) => {
            let axioms = x.check_axioms();
            let compactness = x.compactness(ctx.limits.opens)?;
            let separation = x.separation();
            let priestley = match x.order() {
                Some(_) => Some(x.priestley(ctx.limits.opens)?),
                None => None,
            };
            let passed = axioms.all();
            let text = format!(
                "{} points, {} opens\naxioms: {}\ncompactness: {:?}\nT0: {}, Hausdorff: {}\npriestley: {}\n",
                x.point_count(),
                x.opens().len(),
                axioms.all(),
                compactness,
                separation.t0,
                separation.hausdorff,
                priestley.as_ref().map_or("unordered".to_string(), |p| p.holds().to_string()),
            );
            let json = json!({
                "axioms": axioms,
                "compactness": compactness,
                "separation": separation,
                "priestley": priestley,
            });
            Ok(Report::new(json, text, passed))
        }
    }
}

fn hom_report(a: &FinAlgebra, hp: &HomPoset) -> Report {
    let ids = hom_ids(hp.len());
    let homs: Vec<Value> = hp
        .homs
        .iter()
        .zip(&ids)
        .map(|(h, id)| {
            let values: BTreeMap<String, String> =
                (0..a.len()).map(|x| (a.element(x).to_string(), h.value(x).to_string())).collect();
            json!({ "name": id, "values": values })
        })
        .collect();
    let json = json!({
        "bound": hp.bound,
        "possibly_incomplete": hp.possibly_incomplete,
        "homs": homs,
        "order": strict_pairs(&hp.order),
    });
    let mut text = String::new();
    for (h, id) in hp.homs.iter().zip(&ids) {
        let vals: Vec<String> = (0..a.len())
            .map(|x| format!("{} -> {}", a.element(x), h.value(x)))
            .collect();
        let _ = writeln!(text, "{id}: {}", vals.join(", "));
    }
    order_text(&mut text, &hp.order, &ids);
    if hp.possibly_incomplete {
        text.push_str("warning: the hom list may be incomplete for this bound\n");
    }
    Report::new(json, text, true).with_dot(hp.to_dot())
}

pub fn homs(ctx: &Context) -> Result<Report> {
    let a = ctx.algebras(1, "algebra")?.remove(0);
    let hp = HomPoset::from_homs(enumerate_homs(&a, ctx.bound)?);
    Ok(hom_report(&a, &hp))
}

fn ideal_dot(name: &str, a: &FinAlgebra, ideals: &[Ideal], order: &Relation, first: usize) -> String {
    let ids: Vec<String> = (0..ideals.len()).map(|k| format!("I{}", k + first)).collect();
    let labels: Vec<String> = ideals
        .iter()
        .zip(&ids)
        .map(|(i, id)| format!("{id} = {{{}}}", member_labels(a, i).join(", ")))
        .collect();
    order.to_dot_with_ids(name, &ids, &labels)
}

pub fn max_ideals(ctx: &Context) -> Result<Report> {
    let b = ctx.algebras(1, "algebra")?.remove(0);
    let maximal = maximal_ideals(&b)?;
    let members: Vec<Vec<String>> = maximal.iter().map(|m| member_labels(&b, m)).collect();
    let mut text = String::new();
    for (k, m) in members.iter().enumerate() {
        let _ = writeln!(text, "I{k} = {{{}}}", m.join(", "));
    }
    let inclusion = Relation::from_fn(maximal.len(), |i, j| maximal[i].is_subset_of(&maximal[j]));
    let dot = ideal_dot("max", &b, &maximal, &inclusion, 0);
    Ok(Report::new(json!({ "maximal_ideals": members }), text, true).with_dot(dot))
}

pub fn max_le(ctx: &Context) -> Result<Report> {
    let mut v = ctx.algebras(2, "subreduct A, ambient B")?;
    let (a, b) = (v.remove(0), v.remove(0));
    let t = traces(&a, &b)?;
    let members: Vec<Vec<String>> = t.traces.iter().map(|i| member_labels(&a, i)).collect();
    let ambient: Vec<Vec<String>> = t.ambient_maximal.iter().map(|i| member_labels(&b, i)).collect();
    let mut text = String::new();
    for (k, m) in members.iter().enumerate() {
        let _ = writeln!(text, "I{k} = {{{}}}", m.join(", "));
    }
    let ids: Vec<String> = (0..members.len()).map(|k| format!("I{k}")).collect();
    order_text(&mut text, &t.order, &ids);
    let json = json!({
        "traces": members,
        "ambient_maximal": ambient,
        "inclusions": strict_pairs(&t.order),
    });
    let dot = ideal_dot("max_le", &a, &t.traces, &t.order, 0);
    Ok(Report::new(json, text, true).with_dot(dot))
}

pub fn dual(ctx: &Context) -> Result<Report> {
    let a = ctx.algebras(1, "algebra")?.remove(0);
    let d = upsilon(&a, ctx.limits)?;
    let x = &d.space;
    let order = x.order().expect("dual spaces are ordered");
    let mut text = format!(
        "{} points, grid {}, {} opens, {} clopens\n",
        x.point_count(),
        x.grid(),
        x.opens().len(),
        x.clopens().len()
    );
    order_text(&mut text, order, x.points());
    let dot = order.to_dot_with_ids("dual", x.points(), x.points());
    Ok(Report::new(space_value(x), text, true).with_dot(dot))
}

pub fn clopens(ctx: &Context) -> Result<Report> {
    let x = match ctx.single()? {
        Input::Space(x) => x,
        Input::Algebra(a) => upsilon(&a, ctx.limits)?.space,
    };
    let clopen = x.clopens();
    let increasing = match x.order() {
        Some(_) => Some(x.increasing_clopens()?),
        None => None,
    };
    let mut text = format!("{} clopens\n", clopen.len());
    for c in &clopen {
        let _ = writeln!(text, "  {}", fuzzy_text(c));
    }
    if let Some(inc) = &increasing {
        let _ = writeln!(text, "{} increasing clopens", inc.len());
        for c in inc {
            let _ = writeln!(text, "  {}", fuzzy_text(c));
        }
    }
    let points = x.points();
    let json = json!({
        "points": points,
        "clopens": clopen.iter().map(|c| fuzzy_json(points, c)).collect::<Vec<_>>(),
        "increasing_clopens": increasing
            .as_ref()
            .map(|inc| inc.iter().map(|c| fuzzy_json(points, c)).collect::<Vec<_>>()),
        "clop_up": match x.order() {
            Some(_) => Some(to_value(&clop_up(&x)?.to_spec())),
            None => None,
        },
    });
    Ok(Report::new(json, text, true))
}

pub fn duality_check(ctx: &Context) -> Result<Report> {
    let verdict = match ctx.single()? {
        Input::Algebra(a) => check_duality(&a, ctx.limits)?,
        Input::Space(x) => check_duality_space(&x, ctx.limits)?,
    };
    let mut text = format!(
        "lcc: {}\nh_complete: {}\ncounit_iso: {}\nunit_order_homeo: {}\n",
        verdict.lcc, verdict.h_complete, verdict.counit_iso, verdict.unit_order_homeo
    );
    if let Some(p) = verdict.priestley {
        let _ = writeln!(text, "priestley: {p}");
    }
    if let Some(e) = &verdict.certificates.enlargement {
        let _ = writeln!(text, "enlargement: {{{}}}", e.join(", "));
    }
    let passed = verdict.passed();
    Ok(Report::new(to_value(&verdict), text, passed))
}

pub fn stone_compare(ctx: &Context) -> Result<Report> {
    let b = ctx.algebras(1, "MV-algebra")?.remove(0);
    let r = compare(&b, ctx.limits)?;
    let maximal: Vec<Vec<String>> = r.maximal.iter().map(|m| member_labels(&b, m)).collect();
    let json = json!({
        "homs_agree": r.homs_agree,
        "bijective": r.bijective,
        "continuous": r.continuous,
        "open": r.open,
        "trivial_order": r.trivial_order,
        "clop_up_is_clop": r.clop_up_is_clop,
        "map": r.map,
        "maximal_ideals": maximal,
    });
    let mut text = String::new();
    for (f, &m) in r.map.iter().enumerate() {
        let _ = writeln!(text, "f{f} -> I{m} = {{{}}}", maximal[m].join(", "));
    }
    let _ = writeln!(
        text,
        "bijective: {}, continuous: {}, open: {}, trivial order: {}, Clop↑ = Clop: {}",
        r.bijective, r.continuous, r.open, r.trivial_order, r.clop_up_is_clop
    );
    let passed = r.holds();
    Ok(Report::new(json, text, passed))
}

pub fn compatible(ctx: &Context) -> Result<Report> {
    let mut v = ctx.algebras(3, "subreduct A, subreduct E, ambient B")?;
    let (a, e, b) = (v.remove(0), v.remove(0), v.remove(0));
    let ra = compat_relation(&a, &b)?;
    let re = compat_relation(&e, &b)?;
    let same = ra.relation == re.relation;
    let traces = compare_traces(&a, &e, &b)?;
    let json = json!({
        "compatible": same,
        "relation_a": strict_pairs(&ra.relation),
        "relation_e": strict_pairs(&re.relation),
        "traces": traces,
    });
    let text = format!(
        "compatible: {same}\ntrace posets equal under the ideal indexing: {}\ntrace posets isomorphic: {}\n",
        traces.same_under_index, traces.abstractly_isomorphic
    );
    Ok(Report::new(json, text, same))
}

pub fn h_complete(ctx: &Context) -> Result<Report> {
    let mut v = ctx.algebras(2, "subreduct A, ambient B")?;
    let (a, b) = (v.remove(0), v.remove(0));
    let h = is_h_complete(&a, &b, ctx.limits.carrier)?;
    let certificate = h.certificate.as_ref().map(|c| to_value(&c.to_spec()));
    let mut text = format!(
        "h_complete: {}\nsupersets explored: {}\ncompatible supersets: {}\n",
        h.complete, h.explored, h.compatible_supersets
    );
    if let Some(c) = &h.certificate {
        let labels: Vec<String> = c.elements().iter().map(ToString::to_string).collect();
        let _ = writeln!(text, "certificate ({} elements): {{{}}}", c.len(), labels.join(", "));
    }
    let json = json!({
        "h_complete": h.complete,
        "explored": h.explored,
        "compatible_supersets": h.compatible_supersets,
        "certificate": certificate,
    });
    Ok(Report::new(json, text, h.complete))
}

fn parse_unit(s: &str) -> Result<UnitRational> {
    s.parse().map_err(CliError::from)
}

pub fn separate(ctx: &Context, x: Option<&str>, y: Option<&str>, count: usize, max_denom: u64) -> Result<Report> {
    match (x, y) {
        (Some(x), Some(y)) => {
            let (x, y) = (parse_unit(x)?, parse_unit(y)?);
            let s = synthesize_separator(&x, &y)?;
            let (tx, ty) = (s.term.eval(std::slice::from_ref(&x))?, s.term.eval(std::slice::from_ref(&y))?);
            let passed = s.term.is_neg_free() && tx.is_zero() && ty.is_one() && s.depth <= s.depth_cap;
            let json = json!({
                "term": s.term.to_string(),
                "steps": s.steps.iter().map(|st| format!("{st:?}")).collect::<Vec<_>>(),
                "depth": s.depth,
                "depth_cap": s.depth_cap,
                "values": [tx.to_string(), ty.to_string()],
            });
            let text = format!("{}\nt({x}) = {tx}, t({y}) = {ty}\n", s.term);
            Ok(Report::new(json, text, passed))
        }
        (None, None) => {
            let mut failures = Vec::new();
            let mut max_depth = 0;
            let pairs = samples::separator_pairs(count, max_denom, ctx.seed);
            for (x, y) in &pairs {
                let s = synthesize_separator(x, y)?;
                max_depth = max_depth.max(s.depth);
                let ok = s.term.is_neg_free()
                    && s.depth <= s.depth_cap
                    && s.term.eval(std::slice::from_ref(x))?.is_zero()
                    && s.term.eval(std::slice::from_ref(y))?.is_one();
                if !ok {
                    failures.push(format!("({x}, {y})"));
                }
            }
            let json = json!({
                "pairs": pairs.len(),
                "seed": ctx.seed,
                "max_denom": max_denom,
                "max_depth": max_depth,
                "failures": failures,
            });
            let text = format!(
                "{} pairs (seed {}, denominators <= {max_denom}), max depth {max_depth}, {} failures\n",
                pairs.len(),
                ctx.seed,
                failures.len()
            );
            Ok(Report::new(json, text, failures.is_empty()))
        }
        _ => Err(CliError::Usage("separate takes both x and y, or neither".into())),
    }
}

pub fn hasse(ctx: &Context, of: Diagram) -> Result<Report> {
    let (relation, ids, labels, name) = match of {
        Diagram::Homs => {
            let a = ctx.algebras(1, "algebra")?.remove(0);
            let hp = HomPoset::from_homs(enumerate_homs(&a, ctx.bound)?);
            let ids = hom_ids(hp.len());
            (hp.order, ids.clone(), ids, "homs")
        }
        Diagram::MaxLe => {
            let mut v = ctx.algebras(2, "subreduct A, ambient B")?;
            let (a, b) = (v.remove(0), v.remove(0));
            let t = traces(&a, &b)?;
            let ids: Vec<String> = (0..t.traces.len()).map(|k| format!("I{k}")).collect();
            let labels = t
                .traces
                .iter()
                .zip(&ids)
                .map(|(i, id)| format!("{id} = {{{}}}", member_labels(&a, i).join(", ")))
                .collect();
            (t.order, ids, labels, "max_le")
        }
        Diagram::Compat => {
            let mut v = ctx.algebras(2, "subreduct A, ambient B")?;
            let (a, b) = (v.remove(0), v.remove(0));
            let c = compat_relation(&a, &b)?;
            let ids = hom_ids(c.ambient_homs.len());
            (c.relation, ids.clone(), ids, "compat")
        }
    };
    let dot = relation.to_dot_with_ids(name, &ids, &labels);
    let json = json!({
        "nodes": labels,
        "edges": relation
            .hasse_edges()
            .iter()
            .map(|&(i, j)| (ids[i].clone(), ids[j].clone()))
            .collect::<Vec<_>>(),
    });
    let mut text = String::new();
    order_text(&mut text, &relation, &ids);
    Ok(Report::new(json, text, true).with_dot(dot).default_to(Format::Dot))
}
