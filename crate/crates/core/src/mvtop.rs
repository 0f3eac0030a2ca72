//! Finite MV-topological spaces.
//!
//! Membership values live on a fixed grid `Ł_N`, stored as numerators over
//! `N`, which keeps every closure finite.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poset::Relation;
use crate::UnitRational;

/// Default limit on the number of opens handled by exhaustive procedures.
pub const OPENS_LIMIT: usize = 4096;

/// A fuzzy subset of a finite point set with values in `Ł_grid`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FuzzySubset {
    grid: u64,
    values: Vec<u64>,
}

impl FuzzySubset {
    /// Numerators over `grid`; each must be at most `grid`.
    pub fn from_numerators(grid: u64, values: Vec<u64>) -> Result<FuzzySubset> {
        if grid == 0 {
            return Err(Error::InvalidSpace("grid must be at least 1".into()));
        }
        if let Some(v) = values.iter().find(|&&v| v > grid) {
            return Err(Error::OffGrid {
                value: format!("{v}/{grid}"),
                grid,
            });
        }
        Ok(FuzzySubset { grid, values })
    }

    pub fn from_values(grid: u64, values: &[UnitRational]) -> Result<FuzzySubset> {
        let nums = values
            .iter()
            .map(|v| {
                v.on_grid(grid).ok_or_else(|| Error::OffGrid {
                    value: v.to_string(),
                    grid,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        FuzzySubset::from_numerators(grid, nums)
    }

    pub fn constant(grid: u64, points: usize, numerator: u64) -> FuzzySubset {
        FuzzySubset {
            grid,
            values: vec![numerator; points],
        }
    }

    pub fn zero(grid: u64, points: usize) -> FuzzySubset {
        FuzzySubset::constant(grid, points, 0)
    }

    pub fn one(grid: u64, points: usize) -> FuzzySubset {
        FuzzySubset::constant(grid, points, grid)
    }

    /// Crisp singleton `{p}`.
    pub fn singleton(grid: u64, points: usize, p: usize) -> FuzzySubset {
        let mut s = FuzzySubset::zero(grid, points);
        s.values[p] = grid;
        s
    }

    pub fn grid(&self) -> u64 {
        self.grid
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn numerators(&self) -> &[u64] {
        &self.values
    }

    pub fn numerator(&self, p: usize) -> u64 {
        self.values[p]
    }

    pub fn value(&self, p: usize) -> UnitRational {
        UnitRational::from_grid(self.values[p], self.grid)
    }

    pub fn values(&self) -> Vec<UnitRational> {
        (0..self.len()).map(|p| self.value(p)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn is_one(&self) -> bool {
        self.values.iter().all(|&v| v == self.grid)
    }

    pub fn is_crisp(&self) -> bool {
        self.values.iter().all(|&v| v == 0 || v == self.grid)
    }

    /// The same subset on another grid, if every value lies on it.
    pub fn regrid(&self, grid: u64) -> Option<FuzzySubset> {
        if grid == self.grid {
            return Some(self.clone());
        }
        let values = self
            .values
            .iter()
            .map(|&v| {
                let scaled = v as u128 * grid as u128;
                (scaled % self.grid as u128 == 0).then(|| (scaled / self.grid as u128) as u64)
            })
            .collect::<Option<Vec<_>>>()?;
        Some(FuzzySubset { grid, values })
    }

    fn zip(&self, other: &FuzzySubset, f: impl Fn(u64, u64) -> u64) -> FuzzySubset {
        assert_eq!(self.grid, other.grid, "fuzzy subsets on different grids");
        FuzzySubset {
            grid: self.grid,
            values: self.values.iter().zip(&other.values).map(|(&a, &b)| f(a, b)).collect(),
        }
    }

    pub fn add(&self, other: &FuzzySubset) -> FuzzySubset {
        let n = self.grid;
        self.zip(other, |a, b| (a + b).min(n))
    }

    pub fn mul(&self, other: &FuzzySubset) -> FuzzySubset {
        let n = self.grid;
        self.zip(other, |a, b| (a + b).saturating_sub(n))
    }

    pub fn join(&self, other: &FuzzySubset) -> FuzzySubset {
        self.zip(other, u64::max)
    }

    pub fn meet(&self, other: &FuzzySubset) -> FuzzySubset {
        self.zip(other, u64::min)
    }

    pub fn neg(&self) -> FuzzySubset {
        FuzzySubset {
            grid: self.grid,
            values: self.values.iter().map(|&v| self.grid - v).collect(),
        }
    }

    /// `k · α = α ⊕ … ⊕ α`.
    pub fn scale(&self, k: u64) -> FuzzySubset {
        let n = self.grid;
        FuzzySubset {
            grid: n,
            values: self.values.iter().map(|&v| v.saturating_mul(k).min(n)).collect(),
        }
    }

    pub fn le(&self, other: &FuzzySubset) -> bool {
        self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }

    /// Multiplicity after which `k · α` no longer grows: `⌈1 / min nonzero α⌉`.
    pub fn saturation(&self) -> u64 {
        self.values
            .iter()
            .filter(|&&v| v > 0)
            .map(|&v| self.grid.div_ceil(v))
            .max()
            .unwrap_or(1)
    }

    /// Monotone for `order`: `x ≤ y` implies `α(x) ≤ α(y)`.
    pub fn is_increasing(&self, order: &Relation) -> bool {
        order.pairs().iter().all(|&(x, y)| self.values[x] <= self.values[y])
    }
}

fn join_all<'a>(grid: u64, points: usize, family: impl IntoIterator<Item = &'a FuzzySubset>) -> FuzzySubset {
    family
        .into_iter()
        .fold(FuzzySubset::zero(grid, points), |acc, a| acc.join(a))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Generation {
    Base,
    Subbase,
}

/// A finite MV-topological space, optionally partially ordered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MVTopology {
    points: Vec<String>,
    grid: u64,
    opens: Vec<FuzzySubset>,
    lookup: HashSet<FuzzySubset>,
    order: Option<Relation>,
}

/// Result of the exhaustive axiom check.
#[derive(Clone, Debug, Default, Serialize)]
pub struct TopologyAxioms {
    pub has_zero: bool,
    pub has_one: bool,
    pub closed_under_join: bool,
    pub closed_under_mul: bool,
    pub closed_under_add: bool,
    pub closed_under_meet: bool,
}

impl TopologyAxioms {
    pub fn all(&self) -> bool {
        self.has_zero
            && self.has_one
            && self.closed_under_join
            && self.closed_under_mul
            && self.closed_under_add
            && self.closed_under_meet
    }
}

fn close_under(
    seed: impl IntoIterator<Item = FuzzySubset>,
    ops: &[fn(&FuzzySubset, &FuzzySubset) -> FuzzySubset],
    limit: usize,
) -> Result<Vec<FuzzySubset>> {
    let mut seen: HashSet<FuzzySubset> = HashSet::new();
    let mut list: Vec<FuzzySubset> = Vec::new();
    for s in seed {
        if seen.insert(s.clone()) {
            list.push(s);
        }
    }
    let mut i = 0;
    while i < list.len() {
        let a = list[i].clone();
        i += 1;
        for k in 0..i {
            for op in ops {
                let r = op(&a, &list[k]);
                if seen.insert(r.clone()) {
                    list.push(r);
                    if list.len() > limit {
                        return Err(Error::SizeGuard {
                            what: "open family",
                            size: list.len(),
                            limit,
                        });
                    }
                }
            }
        }
    }
    list.sort();
    Ok(list)
}

impl MVTopology {
    /// A space whose open family is given in full; checked against the axioms.
    pub fn new(points: Vec<String>, grid: u64, opens: Vec<FuzzySubset>, order: Option<Relation>) -> Result<MVTopology> {
        let t = Self::assemble(points, grid, opens, order)?;
        let axioms = t.check_axioms();
        if !axioms.all() {
            return Err(Error::InvalidSpace(format!("open family violates the axioms: {axioms:?}")));
        }
        Ok(t)
    }

    fn assemble(points: Vec<String>, grid: u64, mut opens: Vec<FuzzySubset>, order: Option<Relation>) -> Result<MVTopology> {
        let n = points.len();
        if grid == 0 {
            return Err(Error::InvalidSpace("grid must be at least 1".into()));
        }
        if opens.iter().any(|o| o.len() != n || o.grid != grid) {
            return Err(Error::InvalidSpace("open sets must be total on the points and share the grid".into()));
        }
        if let Some(r) = &order {
            if r.size() != n || !r.is_partial_order() {
                return Err(Error::InvalidSpace("order must be a partial order on the points".into()));
            }
        }
        let distinct: HashSet<&String> = points.iter().collect();
        if distinct.len() != n {
            return Err(Error::InvalidSpace("point names must be distinct".into()));
        }
        opens.sort();
        opens.dedup();
        let lookup = opens.iter().cloned().collect();
        Ok(MVTopology {
            points,
            grid,
            opens,
            lookup,
            order,
        })
    }

    /// The topology generated by a base (joins of members) or a subbase
    /// (joins of finite `⊕`, `⊙`, `∧` combinations).
    pub fn generate(
        points: Vec<String>,
        grid: u64,
        family: &[FuzzySubset],
        mode: Generation,
        order: Option<Relation>,
        limit: usize,
    ) -> Result<MVTopology> {
        let n = points.len();
        if family.iter().any(|o| o.len() != n || o.grid != grid) {
            return Err(Error::InvalidSpace("generators must be total on the points and share the grid".into()));
        }
        let ends = [FuzzySubset::zero(grid, n), FuzzySubset::one(grid, n)];
        let base = match mode {
            Generation::Base => family.to_vec(),
            Generation::Subbase => close_under(
                family.iter().cloned().chain(ends.iter().cloned()),
                &[FuzzySubset::add, FuzzySubset::mul, FuzzySubset::meet],
                limit,
            )?,
        };
        let opens = close_under(base.into_iter().chain(ends), &[FuzzySubset::join], limit)?;
        let t = Self::assemble(points, grid, opens, order)?;
        let axioms = t.check_axioms();
        if !axioms.all() {
            return Err(Error::InvalidSpace(format!("family is not a base: {axioms:?}")));
        }
        Ok(t)
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn point_count(&self) -> usize {
        self.points.len()
    }

    pub fn grid(&self) -> u64 {
        self.grid
    }

    pub fn opens(&self) -> &[FuzzySubset] {
        &self.opens
    }

    pub fn order(&self) -> Option<&Relation> {
        self.order.as_ref()
    }

    pub fn with_order(mut self, order: Relation) -> Result<MVTopology> {
        if order.size() != self.points.len() || !order.is_partial_order() {
            return Err(Error::InvalidSpace("order must be a partial order on the points".into()));
        }
        self.order = Some(order);
        Ok(self)
    }

    /// Membership test; subsets on other grids are compared by value.
    pub fn is_open(&self, alpha: &FuzzySubset) -> bool {
        alpha.len() == self.points.len() && alpha.regrid(self.grid).is_some_and(|a| self.lookup.contains(&a))
    }

    pub fn is_closed(&self, alpha: &FuzzySubset) -> bool {
        self.is_open(&alpha.neg())
    }

    pub fn is_clopen(&self, alpha: &FuzzySubset) -> bool {
        self.is_open(alpha) && self.is_closed(alpha)
    }

    /// Opens whose complement is open.
    pub fn clopens(&self) -> Vec<FuzzySubset> {
        self.opens.iter().filter(|o| self.is_closed(o)).cloned().collect()
    }

    pub fn increasing_clopens(&self) -> Result<Vec<FuzzySubset>> {
        let order = self.require_order()?;
        Ok(self.clopens().into_iter().filter(|c| c.is_increasing(order)).collect())
    }

    fn require_order(&self) -> Result<&Relation> {
        self.order
            .as_ref()
            .ok_or_else(|| Error::InvalidSpace("operation needs an ordered space".into()))
    }

    pub fn check_axioms(&self) -> TopologyAxioms {
        let n = self.points.len();
        let closed = |op: fn(&FuzzySubset, &FuzzySubset) -> FuzzySubset| {
            self.opens
                .iter()
                .all(|a| self.opens.iter().all(|b| self.lookup.contains(&op(a, b))))
        };
        TopologyAxioms {
            has_zero: self.lookup.contains(&FuzzySubset::zero(self.grid, n)),
            has_one: self.lookup.contains(&FuzzySubset::one(self.grid, n)),
            closed_under_join: closed(FuzzySubset::join),
            closed_under_mul: closed(FuzzySubset::mul),
            closed_under_add: closed(FuzzySubset::add),
            closed_under_meet: closed(FuzzySubset::meet),
        }
    }

    /// Every open is the join of the members of `family` below it.
    pub fn is_base(&self, family: &[FuzzySubset]) -> bool {
        family.iter().all(|f| self.is_open(f))
            && self.opens.iter().all(|o| {
                let below = family.iter().filter(|f| FuzzySubset::le(f, o));
                join_all(self.grid, self.points.len(), below) == *o
            })
    }

    /// `⊆`-minimal subfamilies of `family` whose join is `1`. Each point needs
    /// a member taking value 1 there, so these are the minimal transversals
    /// of the per-point sets.
    pub fn minimal_covers(&self, family: &[FuzzySubset], limit: usize) -> Result<Vec<Vec<usize>>> {
        if family.len() > limit {
            return Err(Error::SizeGuard {
                what: "open family",
                size: family.len(),
                limit,
            });
        }
        let n = self.points.len();
        let hitting: Vec<Vec<usize>> = (0..n)
            .map(|p| (0..family.len()).filter(|&i| family[i].values[p] == family[i].grid).collect())
            .collect();
        if hitting.iter().any(Vec::is_empty) {
            return Ok(Vec::new());
        }
        let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
        fn go(hitting: &[Vec<usize>], p: usize, chosen: &mut Vec<usize>, found: &mut BTreeSet<Vec<usize>>) {
            if p == hitting.len() {
                let mut c = chosen.clone();
                c.sort_unstable();
                c.dedup();
                found.insert(c);
                return;
            }
            if hitting[p].iter().any(|i| chosen.contains(i)) {
                go(hitting, p + 1, chosen, found);
                return;
            }
            for &i in &hitting[p] {
                chosen.push(i);
                go(hitting, p + 1, chosen, found);
                chosen.pop();
            }
        }
        go(&hitting, 0, &mut Vec::new(), &mut found);
        let all: Vec<Vec<usize>> = found.into_iter().collect();
        Ok(all
            .iter()
            .filter(|c| !all.iter().any(|d| d != *c && d.iter().all(|x| c.contains(x))))
            .cloned()
            .collect())
    }

    /// Whether some multiset over `cover` sums to 1. Multiplicities beyond
    /// each member's saturation add nothing, so the saturated sum decides.
    pub fn has_additive_subcover(&self, family: &[FuzzySubset], cover: &[usize]) -> bool {
        let n = self.points.len();
        cover
            .iter()
            .map(|&i| family[i].scale(family[i].saturation()))
            .fold(FuzzySubset::zero(self.grid, n), |acc, a| acc.add(&a))
            .is_one()
    }

    /// Compactness by definition: every minimal open cover must contain an
    /// additive cover. Finite families make every cover finite.
    pub fn compactness(&self, limit: usize) -> Result<Compactness> {
        let covers = self.minimal_covers(&self.opens, limit)?;
        let n = self.points.len();
        let finite_subcover = covers
            .iter()
            .all(|c| join_all(self.grid, n, c.iter().map(|&i| &self.opens[i])).is_one());
        let additive = covers.iter().all(|c| self.has_additive_subcover(&self.opens, c));
        Ok(match (finite_subcover, additive) {
            (true, true) => Compactness::StronglyCompact,
            (false, true) => Compactness::Compact,
            _ => Compactness::Neither,
        })
    }

    /// Whether `subbase` is large: `k · α` stays in it for every member.
    pub fn is_large(subbase: &[FuzzySubset]) -> bool {
        let set: HashSet<&FuzzySubset> = subbase.iter().collect();
        subbase
            .iter()
            .all(|a| (1..=a.saturation()).all(|k| set.contains(&a.scale(k))))
    }

    /// Compactness through a large subbase: every cover drawn from the
    /// subbase must have an additive subcover.
    pub fn compact_via_subbase(&self, subbase: &[FuzzySubset], limit: usize) -> Result<bool> {
        if !MVTopology::is_large(subbase) {
            return Err(Error::InvalidSpace("subbase is not large".into()));
        }
        let generated = MVTopology::generate(
            self.points.clone(),
            self.grid,
            subbase,
            Generation::Subbase,
            None,
            limit,
        )?;
        if generated.opens != self.opens {
            return Err(Error::InvalidSpace("family is not a subbase of this topology".into()));
        }
        let covers = self.minimal_covers(subbase, limit)?;
        Ok(covers.iter().all(|c| self.has_additive_subcover(subbase, c)))
    }

    pub fn separation(&self) -> SeparationReport {
        let n = self.points.len();
        let t0 = (0..n).all(|x| (0..n).all(|y| x == y || self.opens.iter().any(|o| o.values[x] != o.values[y])));
        let top = |o: &FuzzySubset, p: usize| o.values[p] == self.grid;
        let hausdorff = (0..n).all(|x| {
            (0..n).all(|y| {
                x == y
                    || self.opens.iter().filter(|a| top(a, x)).any(|a| {
                        self.opens
                            .iter()
                            .filter(|b| top(b, y))
                            .any(|b| a.meet(b).is_zero())
                    })
            })
        });
        let clopens = self.clopens();
        let clopen_base = self.is_base(&clopens);
        let crisp_singletons_closed = (0..n).all(|p| self.is_closed(&FuzzySubset::singleton(self.grid, n, p)));
        let order_disconnected = self.order.as_ref().map(|order| {
            let increasing: Vec<&FuzzySubset> = clopens.iter().filter(|c| c.is_increasing(order)).collect();
            (0..n).all(|x| {
                (0..n).all(|y| {
                    order.holds(x, y)
                        || increasing
                            .iter()
                            .any(|c| c.values[x] == self.grid && c.values[y] == 0)
                })
            })
        });
        SeparationReport {
            t0,
            hausdorff,
            crisp_singletons_closed,
            clopen_base,
            totally_order_disconnected: order_disconnected,
        }
    }

    /// Compact, totally order disconnected, with a base of clopens.
    pub fn priestley(&self, limit: usize) -> Result<PriestleyReport> {
        self.require_order()?;
        let sep = self.separation();
        let compact = self.compactness(limit)?.is_compact();
        Ok(PriestleyReport {
            compact,
            totally_order_disconnected: sep.totally_order_disconnected.unwrap_or(false),
            clopen_base: sep.clopen_base,
        })
    }

    pub fn to_spec(&self) -> SpaceSpec {
        SpaceSpec {
            points: self.points.clone(),
            grid: self.grid,
            opens: self
                .opens
                .iter()
                .map(|o| {
                    self.points
                        .iter()
                        .enumerate()
                        .map(|(p, name)| (name.clone(), o.value(p)))
                        .collect()
                })
                .collect(),
            order: self.order.as_ref().map(|r| {
                r.pairs()
                    .into_iter()
                    .filter(|(x, y)| x != y)
                    .map(|(x, y)| (self.points[x].clone(), self.points[y].clone()))
                    .collect()
            }),
            generate: None,
        }
    }

    pub fn from_spec(spec: &SpaceSpec, limit: usize) -> Result<MVTopology> {
        let index: BTreeMap<&str, usize> = spec.points.iter().enumerate().map(|(i, p)| (p.as_str(), i)).collect();
        let n = spec.points.len();
        let mut opens = Vec::with_capacity(spec.opens.len());
        for (k, o) in spec.opens.iter().enumerate() {
            let mut values = vec![None; n];
            for (name, v) in o {
                let p = *index
                    .get(name.as_str())
                    .ok_or_else(|| Error::schema(format!("opens[{k}].{name}"), "unknown point"))?;
                values[p] = Some(v.clone());
            }
            let values = values
                .into_iter()
                .enumerate()
                .map(|(p, v)| v.ok_or_else(|| Error::schema(format!("opens[{k}]"), format!("missing point {}", spec.points[p]))))
                .collect::<Result<Vec<_>>>()?;
            opens.push(FuzzySubset::from_values(spec.grid, &values)?);
        }
        let order = match &spec.order {
            None => None,
            Some(pairs) => {
                let mut r = Relation::identity(n);
                for (k, (x, y)) in pairs.iter().enumerate() {
                    let find = |s: &String| {
                        index
                            .get(s.as_str())
                            .copied()
                            .ok_or_else(|| Error::schema(format!("order[{k}]"), format!("unknown point {s}")))
                    };
                    r.set(find(x)?, find(y)?, true);
                }
                Some(r.transitive_closure())
            }
        };
        match spec.generate {
            None => MVTopology::new(spec.points.clone(), spec.grid, opens, order),
            Some(mode) => MVTopology::generate(spec.points.clone(), spec.grid, &opens, mode, order, limit),
        }
    }

    pub fn from_json(text: &str, limit: usize) -> Result<MVTopology> {
        let spec: SpaceSpec = serde_json::from_str(text)?;
        MVTopology::from_spec(&spec, limit)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_spec()).expect("space spec serializes")
    }
}

/// JSON description of a space. Without `generate`, `opens` is the full
/// topology; otherwise it is a base or subbase.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceSpec {
    pub points: Vec<String>,
    pub grid: u64,
    pub opens: Vec<BTreeMap<String, UnitRational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generate: Option<Generation>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Compactness {
    StronglyCompact,
    Compact,
    Neither,
}

impl Compactness {
    pub fn is_compact(self) -> bool {
        self != Compactness::Neither
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparationReport {
    pub t0: bool,
    pub hausdorff: bool,
    pub crisp_singletons_closed: bool,
    pub clopen_base: bool,
    /// `None` for unordered spaces.
    pub totally_order_disconnected: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PriestleyReport {
    pub compact: bool,
    pub totally_order_disconnected: bool,
    pub clopen_base: bool,
}

impl PriestleyReport {
    pub fn holds(&self) -> bool {
        self.compact && self.totally_order_disconnected && self.clopen_base
    }
}

// ---------------------------------------------------------------------------
// Maps between spaces

/// `β ∘ f`.
pub fn preimage(f: &[usize], beta: &FuzzySubset) -> FuzzySubset {
    FuzzySubset {
        grid: beta.grid,
        values: f.iter().map(|&y| beta.values[y]).collect(),
    }
}

/// `y ↦ ⋁ {α(x) : f(x) = y}`, with the empty join 0.
pub fn image(f: &[usize], alpha: &FuzzySubset, target_points: usize) -> FuzzySubset {
    let mut values = vec![0; target_points];
    for (x, &y) in f.iter().enumerate() {
        values[y] = values[y].max(alpha.values[x]);
    }
    FuzzySubset {
        grid: alpha.grid,
        values,
    }
}

fn total(f: &[usize], x: &MVTopology, y: &MVTopology) -> bool {
    f.len() == x.point_count() && f.iter().all(|&p| p < y.point_count())
}

pub fn is_continuous(f: &[usize], x: &MVTopology, y: &MVTopology) -> bool {
    total(f, x, y) && y.opens.iter().all(|b| x.is_open(&preimage(f, b)))
}

/// Continuity checked on a subbase of the target only.
pub fn is_continuous_via_subbase(f: &[usize], x: &MVTopology, subbase: &[FuzzySubset]) -> bool {
    f.len() == x.point_count() && subbase.iter().all(|b| x.is_open(&preimage(f, b)))
}

pub fn is_open_map(f: &[usize], x: &MVTopology, y: &MVTopology) -> bool {
    total(f, x, y) && x.opens.iter().all(|a| y.is_open(&image(f, a, y.point_count())))
}

pub fn is_closed_map(f: &[usize], x: &MVTopology, y: &MVTopology) -> bool {
    total(f, x, y)
        && x
            .opens
            .iter()
            .all(|a| y.is_closed(&image(f, &a.neg(), y.point_count())))
}

pub fn is_bijection(f: &[usize], target_points: usize) -> bool {
    let set: HashSet<usize> = f.iter().copied().collect();
    f.len() == target_points && set.len() == target_points
}

pub fn is_homeomorphism(f: &[usize], x: &MVTopology, y: &MVTopology) -> bool {
    is_bijection(f, y.point_count()) && is_continuous(f, x, y) && is_open_map(f, x, y)
}

/// `x ≤ x'` iff `f(x) ≤ f(x')`.
pub fn is_order_embedding(f: &[usize], x: &Relation, y: &Relation) -> bool {
    (0..f.len()).all(|a| (0..f.len()).all(|b| x.holds(a, b) == y.holds(f[a], f[b])))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("p{i}")).collect()
    }

    fn fs(grid: u64, v: &[u64]) -> FuzzySubset {
        FuzzySubset::from_numerators(grid, v.to_vec()).unwrap()
    }

    #[test]
    fn indiscrete_and_discrete() {
        let ind = MVTopology::generate(names(2), 1, &[], Generation::Base, None, OPENS_LIMIT).unwrap();
        assert_eq!(ind.opens().len(), 2);
        assert!(!ind.separation().t0);

        let crisp = [fs(1, &[1, 0]), fs(1, &[0, 1])];
        let disc = MVTopology::generate(names(2), 1, &crisp, Generation::Base, None, OPENS_LIMIT).unwrap();
        assert_eq!(disc.opens().len(), 4);
        let s = disc.separation();
        assert!(s.t0 && s.hausdorff && s.crisp_singletons_closed);
    }

    #[test]
    fn base_must_be_closed() {
        let half = [fs(2, &[1, 0])];
        assert!(matches!(
            MVTopology::generate(names(2), 2, &half, Generation::Base, None, OPENS_LIMIT),
            Err(Error::InvalidSpace(_))
        ));
        let t = MVTopology::generate(names(2), 2, &half, Generation::Subbase, None, OPENS_LIMIT).unwrap();
        assert!(t.check_axioms().all());
        assert!(t.is_open(&fs(2, &[2, 0])));
    }

    #[test]
    fn maps() {
        let a = fs(4, &[1, 3, 2]);
        let id = [0, 1, 2];
        assert_eq!(preimage(&id, &a), a);
        assert_eq!(image(&id, &a, 3), a);
        assert_eq!(image(&[0, 0, 0], &a, 1), fs(4, &[3]));
        assert_eq!(image(&[1, 1, 1], &a, 2), fs(4, &[0, 3]));
        let b = fs(4, &[1, 3]);
        assert_eq!(preimage(&[1, 0], &b), fs(4, &[3, 1]));
    }

    #[test]
    fn continuity() {
        let crisp = [fs(1, &[1, 0]), fs(1, &[0, 1])];
        let disc = MVTopology::generate(names(2), 1, &crisp, Generation::Base, None, OPENS_LIMIT).unwrap();
        let ind = MVTopology::generate(names(2), 1, &[], Generation::Base, None, OPENS_LIMIT).unwrap();
        assert!(is_homeomorphism(&[0, 1], &disc, &disc));
        assert!(is_homeomorphism(&[1, 0], &disc, &disc));
        assert!(is_continuous(&[0, 0], &disc, &ind));
        assert!(is_continuous(&[1, 0], &ind, &ind));
        assert!(!is_continuous(&[0, 1], &ind, &disc));
        assert!(is_continuous_via_subbase(&[0, 1], &disc, &crisp));
        assert!(is_open_map(&[0, 1], &disc, &ind) == false);
        assert!(is_closed_map(&[0, 1], &ind, &disc));
    }

    #[test]
    fn compactness_paths() {
        let sub = [fs(4, &[1, 4]), fs(4, &[4, 1])];
        let t = MVTopology::generate(names(2), 4, &sub, Generation::Subbase, None, OPENS_LIMIT).unwrap();
        assert_eq!(t.compactness(OPENS_LIMIT).unwrap(), Compactness::StronglyCompact);
        assert!(matches!(t.compact_via_subbase(&sub, OPENS_LIMIT), Err(Error::InvalidSpace(_))));
        let mut large: Vec<FuzzySubset> = Vec::new();
        for s in &sub {
            for k in 1..=s.saturation() {
                large.push(s.scale(k));
            }
        }
        assert!(MVTopology::is_large(&large));
        assert!(t.compact_via_subbase(&large, OPENS_LIMIT).unwrap());
    }

    #[test]
    fn additive_cover_of_a_half() {
        let half = fs(2, &[1]);
        let t = MVTopology::generate(names(1), 2, &[half.clone()], Generation::Subbase, None, OPENS_LIMIT).unwrap();
        let family = vec![half.clone(), half.neg()];
        assert!(t.has_additive_subcover(&family, &[0, 1]));
        assert!(t.has_additive_subcover(&family, &[0]));
        assert!(!t.has_additive_subcover(&[fs(2, &[0])], &[0]));
    }

    #[test]
    fn ordered_separation() {
        let crisp = [fs(1, &[1, 0]), fs(1, &[0, 1])];
        let chain = Relation::from_fn(2, |i, j| i <= j);
        let t = MVTopology::generate(names(2), 1, &crisp, Generation::Base, Some(chain), OPENS_LIMIT).unwrap();
        let s = t.separation();
        assert_eq!(s.totally_order_disconnected, Some(true));
        assert!(t.priestley(OPENS_LIMIT).unwrap().holds());
        assert_eq!(t.increasing_clopens().unwrap().len(), 3);
        let ind = MVTopology::generate(names(2), 1, &[], Generation::Base, None, OPENS_LIMIT).unwrap();
        assert!(ind.priestley(OPENS_LIMIT).is_err());
    }

    #[test]
    fn json_round_trip() {
        let sub = [fs(6, &[3, 6]), fs(6, &[2, 0])];
        let t = MVTopology::generate(names(2), 6, &sub, Generation::Subbase, None, OPENS_LIMIT)
            .unwrap()
            .with_order(Relation::from_fn(2, |i, j| i <= j))
            .unwrap();
        let back = MVTopology::from_json(&t.to_json(), OPENS_LIMIT).unwrap();
        assert_eq!(back, t);
        let text = r#"{"points":["f0","f1"],"grid":2,"opens":[{"f0":"1/2","f1":"1"}],"generate":"subbase","order":[["f0","f1"]]}"#;
        let s = MVTopology::from_json(text, OPENS_LIMIT).unwrap();
        assert!(s.order().unwrap().holds(0, 1));
        let bad = r#"{"points":["f0"],"grid":2,"opens":[{"f0":"1/3"}]}"#;
        assert!(matches!(MVTopology::from_json(bad, OPENS_LIMIT), Err(Error::OffGrid { .. })));
    }
}
