//! Ideals, maximal spectra, quotients, the representation in fuzzy subsets
//! of the maximal spectrum, traces on subreducts, and cuts.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use fixedbitset::FixedBitSet;
use num_integer::Integer;
use num_traits::ToPrimitive;

use serde::Serialize;

use crate::algebra::{enumerate_homs, generated_ambient, AlgebraMap, FinAlgebra, Signature, TablesSpec};
use crate::error::{Error, Result};
use crate::poset::Relation;
use crate::UnitRational;

/// A set of element indices of some algebra, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Ideal {
    members: Vec<usize>,
}

impl Ideal {
    pub fn new(mut members: Vec<usize>) -> Ideal {
        members.sort_unstable();
        members.dedup();
        Ideal { members }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, e: usize) -> bool {
        self.members.binary_search(&e).is_ok()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_subset_of(&self, other: &Ideal) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    /// Member elements rendered through the parent algebra.
    pub fn labels(&self, parent: &FinAlgebra) -> Vec<String> {
        self.members.iter().map(|&m| parent.element(m).to_string()).collect()
    }
}

/// Check the ideal axioms: contains 0, downward closed, closed under `+`.
pub fn check_ideal(b: &FinAlgebra, members: &[usize]) -> Result<()> {
    let mut inside = vec![false; b.len()];
    for &m in members {
        if m >= b.len() {
            return Err(Error::NotAnIdeal(format!("index {m} outside the carrier")));
        }
        inside[m] = true;
    }
    if !inside[b.zero()] {
        return Err(Error::NotAnIdeal("missing 0".into()));
    }
    for &x in members {
        if let Some(y) = (0..b.len()).find(|&y| b.le(y, x) && !inside[y]) {
            return Err(Error::NotAnIdeal(format!(
                "{} ≤ {} but only the latter is a member",
                b.element(y),
                b.element(x)
            )));
        }
        for &y in members {
            if !inside[b.add(x, y)] {
                return Err(Error::NotAnIdeal(format!(
                    "{} + {} is not a member",
                    b.element(x),
                    b.element(y)
                )));
            }
        }
    }
    Ok(())
}

/// Smallest ideal containing `seed`: the `+`-closure, then the down-set.
pub fn ideal_closure(b: &FinAlgebra, seed: &[usize]) -> Ideal {
    let mut inside = vec![false; b.len()];
    let mut list = Vec::new();
    for &s in seed.iter().chain(std::iter::once(&b.zero())) {
        if !inside[s] {
            inside[s] = true;
            list.push(s);
        }
    }
    let mut i = 0;
    while i < list.len() {
        let x = list[i];
        i += 1;
        for k in 0..i {
            let r = b.add(x, list[k]);
            if !inside[r] {
                inside[r] = true;
                list.push(r);
            }
        }
    }
    let down: Vec<usize> = (0..b.len()).filter(|&y| list.iter().any(|&x| b.le(y, x))).collect();
    Ideal::new(down)
}

/// All ideals, as a closure system explored from `{0}` by adding one
/// element at a time. Sorted by member list.
pub fn all_ideals(b: &FinAlgebra) -> Vec<Ideal> {
    let start = ideal_closure(b, &[]);
    let mut seen: BTreeSet<Ideal> = BTreeSet::new();
    let mut queue = VecDeque::from([start.clone()]);
    seen.insert(start);
    while let Some(ideal) = queue.pop_front() {
        for e in 0..b.len() {
            if ideal.contains(e) {
                continue;
            }
            let mut seed = ideal.members.clone();
            seed.push(e);
            let next = ideal_closure(b, &seed);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.into_iter().collect()
}

fn proper(b: &FinAlgebra, i: &Ideal) -> bool {
    !i.contains(b.one())
}

/// Maximal proper ideals, sorted by member list.
pub fn maximal_ideals(b: &FinAlgebra) -> Result<Vec<Ideal>> {
    if b.is_trivial() {
        return Err(Error::TrivialAlgebra);
    }
    let proper_ideals: Vec<Ideal> = all_ideals(b).into_iter().filter(|i| proper(b, i)).collect();
    Ok(proper_ideals
        .iter()
        .filter(|i| !proper_ideals.iter().any(|j| j != *i && i.is_subset_of(j)))
        .cloned()
        .collect())
}

/// Whether `i` is proper and `x ∧ y ∈ i` forces `x ∈ i` or `y ∈ i`.
pub fn is_prime(b: &FinAlgebra, i: &Ideal) -> bool {
    proper(b, i)
        && (0..b.len()).all(|x| {
            (0..b.len()).all(|y| !i.contains(b.meet(x, y)) || i.contains(x) || i.contains(y))
        })
}

pub fn prime_ideals(b: &FinAlgebra) -> Result<Vec<Ideal>> {
    if b.is_trivial() {
        return Err(Error::TrivialAlgebra);
    }
    Ok(all_ideals(b).into_iter().filter(|i| is_prime(b, i)).collect())
}

/// Intersection of the maximal ideals.
pub fn radical(b: &FinAlgebra) -> Result<Ideal> {
    let max = maximal_ideals(b)?;
    Ok(Ideal::new(
        (0..b.len()).filter(|&e| max.iter().all(|m| m.contains(e))).collect(),
    ))
}

pub fn is_semisimple(b: &FinAlgebra) -> Result<bool> {
    Ok(radical(b)?.members == [b.zero()])
}

fn require_mv(b: &FinAlgebra) -> Result<()> {
    if b.signature() != Signature::Mv {
        return Err(Error::Signature("operation needs an MV-algebra".into()));
    }
    Ok(())
}

/// The congruence class index of every element under `a ~ b ⇔ d(a,b) ∈ i`.
/// Classes are numbered by their least element.
pub fn congruence_classes(b: &FinAlgebra, i: &Ideal) -> Result<Vec<usize>> {
    require_mv(b)?;
    check_ideal(b, &i.members)?;
    let mut class = vec![usize::MAX; b.len()];
    let mut count = 0;
    for x in 0..b.len() {
        if class[x] != usize::MAX {
            continue;
        }
        for y in x..b.len() {
            if class[y] == usize::MAX && i.contains(b.dist(x, y).expect("mv")) {
                class[y] = count;
            }
        }
        count += 1;
    }
    Ok(class)
}

/// A quotient algebra with its projection.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: FinAlgebra,
    pub projection: AlgebraMap,
    /// Least element of each class.
    pub representatives: Vec<usize>,
}

/// `b / i` as a table algebra with elements named `[rep]`.
pub fn quotient(b: &FinAlgebra, i: &Ideal) -> Result<Quotient> {
    let class = congruence_classes(b, i)?;
    let count = class.iter().max().map_or(0, |m| m + 1);
    let mut representatives = vec![usize::MAX; count];
    for (x, &c) in class.iter().enumerate() {
        if representatives[c] == usize::MAX {
            representatives[c] = x;
        }
    }
    let name = |c: usize| format!("[{}]", b.element(representatives[c]));
    let spec = TablesSpec {
        signature: Signature::Mv,
        elements: (0..count).map(name).collect(),
        zero: name(class[b.zero()]),
        one: Some(name(class[b.one()])),
        add: representatives
            .iter()
            .map(|&x| representatives.iter().map(|&y| name(class[b.add(x, y)])).collect())
            .collect(),
        neg: Some(representatives.iter().map(|&x| name(class[b.neg(x).expect("mv")])).collect()),
        mul: None,
        join: None,
        meet: None,
    };
    let algebra = FinAlgebra::from_tables(&spec)?;
    let projection = AlgebraMap { images: class };
    projection
        .verify(b, &algebra)
        .map_err(|e| Error::Invariant(format!("projection is not a homomorphism: {e}")))?;
    Ok(Quotient {
        algebra,
        projection,
        representatives,
    })
}

/// The embedding of a finite simple MV-algebra (a chain `Ł_m`) into `[0,1]`,
/// given by rank: the class with `r` classes strictly below goes to `r/m`.
pub fn chain_embedding(simple: &FinAlgebra) -> Result<Vec<UnitRational>> {
    let n = simple.len();
    if n < 2 {
        return Err(Error::TrivialAlgebra);
    }
    let m = (n - 1) as u64;
    let values: Vec<UnitRational> = (0..n)
        .map(|x| UnitRational::from_grid((0..n).filter(|&y| y != x && simple.le(y, x)).count() as u64, m))
        .collect();
    crate::algebra::Hom::new(values.clone())
        .verify(simple)
        .map_err(|e| Error::Invariant(format!("quotient is not a Łukasiewicz chain: {e}")))?;
    Ok(values)
}

/// Each element as a fuzzy subset of the maximal spectrum.
#[derive(Clone, Debug)]
pub struct Representation {
    pub maximal: Vec<Ideal>,
    /// `hats[a][k]` is the value of `a` at the `k`-th maximal ideal.
    pub hats: Vec<Vec<UnitRational>>,
}

pub fn belluce_embedding(b: &FinAlgebra) -> Result<Representation> {
    require_mv(b)?;
    if !is_semisimple(b)? {
        return Err(Error::NotSemisimple);
    }
    let maximal = maximal_ideals(b)?;
    let mut hats = vec![Vec::with_capacity(maximal.len()); b.len()];
    for m in &maximal {
        let q = quotient(b, m)?;
        let iota = chain_embedding(&q.algebra)?;
        for (a, hat) in hats.iter_mut().enumerate() {
            hat.push(iota[q.projection.images[a]].clone());
        }
    }
    let distinct: HashSet<&Vec<UnitRational>> = hats.iter().collect();
    if distinct.len() != hats.len() {
        return Err(Error::Invariant("representation is not injective".into()));
    }
    Ok(Representation { maximal, hats })
}

/// Pair each hom into `[0,1]` with its zero set, which must be a maximal
/// ideal; returns `pairs[hom] = index of maximal ideal`. Also checks that
/// every hom agrees with the representation at its ideal.
pub fn hom_ideal_bijection(b: &FinAlgebra) -> Result<Vec<usize>> {
    let rep = belluce_embedding(b)?;
    let homs = enumerate_homs(b, None)?;
    let mut pairs = Vec::with_capacity(homs.len());
    for h in &homs.homs {
        let zeros = Ideal::new(h.zero_set());
        let k = rep
            .maximal
            .iter()
            .position(|m| *m == zeros)
            .ok_or_else(|| Error::Invariant("hom kernel is not a maximal ideal".into()))?;
        if (0..b.len()).any(|a| rep.hats[a][k] != *h.value(a)) {
            return Err(Error::Invariant("hom disagrees with the representation".into()));
        }
        pairs.push(k);
    }
    let distinct: HashSet<usize> = pairs.iter().copied().collect();
    if distinct.len() != pairs.len() || pairs.len() != rep.maximal.len() {
        return Err(Error::Invariant("homs and maximal ideals are not in bijection".into()));
    }
    Ok(pairs)
}

/// Traces `I ∩ A` of the maximal ideals of the generated algebra, ordered by
/// inclusion.
#[derive(Clone, Debug)]
pub struct MaxLe {
    /// Trace of the `k`-th maximal ideal of the ambient, as indices into `A`.
    pub traces: Vec<Ideal>,
    /// `order.holds(i, j)` iff `traces[i] ⊆ traces[j]`.
    pub order: Relation,
    pub ambient_maximal: Vec<Ideal>,
}

pub fn max_le(a: &FinAlgebra, b: &FinAlgebra) -> Result<MaxLe> {
    let generated = generated_ambient(a, b)?;
    let embed = &generated.ambient_index;
    let seeds = &generated.seeds;
    let gen_alg = &generated.algebra;
    let maximal = maximal_ideals(gen_alg)?;
    let traces: Vec<Ideal> = maximal
        .iter()
        .map(|m| Ideal::new((0..a.len()).filter(|&x| m.contains(seeds[x])).collect()))
        .collect();
    for t in &traces {
        check_ideal(a, &t.members)?;
        if !is_prime(a, t) {
            return Err(Error::Invariant("trace of a maximal ideal is not prime".into()));
        }
    }
    let order = Relation::from_fn(traces.len(), |i, j| traces[i].is_subset_of(&traces[j]));
    let ambient_maximal = maximal
        .iter()
        .map(|m| Ideal::new(m.members.iter().map(|&x| embed[x]).collect()))
        .collect();
    Ok(MaxLe {
        traces,
        order,
        ambient_maximal,
    })
}

// ---------------------------------------------------------------------------
// Cuts

/// Default size limit for cut enumeration.
pub const CUT_LIMIT: usize = 64;

/// Up-sets and down-sets of every element, as bitsets.
struct Bounds {
    n: usize,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
}

impl Bounds {
    fn new(b: &FinAlgebra) -> Bounds {
        let n = b.len();
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for x in 0..n {
            for y in 0..n {
                if b.le(x, y) {
                    up[x].insert(y);
                    down[y].insert(x);
                }
            }
        }
        Bounds { n, up, down }
    }

    fn full(&self) -> FixedBitSet {
        let mut s = FixedBitSet::with_capacity(self.n);
        s.insert_range(..);
        s
    }

    fn upper(&self, x: &[usize]) -> FixedBitSet {
        let mut s = self.full();
        for &e in x {
            s.intersect_with(&self.up[e]);
        }
        s
    }

    fn lower(&self, u: &FixedBitSet) -> FixedBitSet {
        let mut s = self.full();
        for e in u.ones() {
            s.intersect_with(&self.down[e]);
        }
        s
    }

    fn closure(&self, x: &[usize]) -> Vec<usize> {
        self.lower(&self.upper(x)).ones().collect()
    }
}

/// `uX`, the upper bounds of `X`.
pub fn upper_bounds(b: &FinAlgebra, x: &[usize]) -> Vec<usize> {
    Bounds::new(b).upper(x).ones().collect()
}

/// `l(u(X))`.
pub fn cut_closure(b: &FinAlgebra, x: &[usize]) -> Vec<usize> {
    Bounds::new(b).closure(x)
}

pub fn is_cut(b: &FinAlgebra, x: &[usize]) -> bool {
    let mut sorted = x.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    cut_closure(b, &sorted) == sorted
}

/// All cuts, found as the closed sets of `X ↦ luX`.
pub fn cuts(b: &FinAlgebra, limit: usize) -> Result<Vec<Vec<usize>>> {
    if b.len() > limit {
        return Err(Error::SizeGuard {
            what: "carrier",
            size: b.len(),
            limit,
        });
    }
    let bounds = Bounds::new(b);
    let start = bounds.closure(&[]);
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start]);
    while let Some(c) = queue.pop_front() {
        for e in 0..b.len() {
            if c.binary_search(&e).is_ok() {
                continue;
            }
            let mut seed = c.clone();
            seed.push(e);
            let next = bounds.closure(&seed);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// All cuts by testing every subset. Only for carriers of at most 16 elements.
pub fn cuts_brute_force(b: &FinAlgebra) -> Result<Vec<Vec<usize>>> {
    if b.len() > 16 {
        return Err(Error::SizeGuard {
            what: "carrier",
            size: b.len(),
            limit: 16,
        });
    }
    let mut out: Vec<Vec<usize>> = (0u32..1 << b.len())
        .map(|mask| (0..b.len()).filter(|&i| mask >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|x| is_cut(b, x))
        .collect();
    out.sort();
    Ok(out)
}

/// Cut tests over a semisimple MV-algebra, using its fuzzy representation
/// with values scaled to integers over a common denominator.
pub struct CutAnalysis<'a> {
    b: &'a FinAlgebra,
    bounds: Bounds,
    rep: Representation,
    grid: u64,
    hat: Vec<Vec<u64>>,
}

impl<'a> CutAnalysis<'a> {
    pub fn new(b: &'a FinAlgebra) -> Result<CutAnalysis<'a>> {
        let rep = belluce_embedding(b)?;
        let grid = rep
            .hats
            .iter()
            .flatten()
            .map(|v| v.denom().to_u64().expect("small denominator"))
            .fold(1u64, |acc, d| acc.lcm(&d));
        let hat = rep
            .hats
            .iter()
            .map(|h| h.iter().map(|v| v.on_grid(grid).expect("common grid")).collect())
            .collect();
        Ok(CutAnalysis {
            b,
            bounds: Bounds::new(b),
            rep,
            grid,
            hat,
        })
    }

    pub fn representation(&self) -> &Representation {
        &self.rep
    }

    fn spectrum(&self) -> usize {
        self.rep.maximal.len()
    }

    /// `⋀ {b̂ ⊖ â : a ∈ X, b ∈ uX} = 0` pointwise on the spectrum.
    pub fn is_limit_cut(&self, x: &[usize]) -> bool {
        let ux: Vec<usize> = self.bounds.upper(x).ones().collect();
        (0..self.spectrum()).all(|k| {
            x.iter()
                .flat_map(|&a| ux.iter().map(move |&u| (a, u)))
                .map(|(a, u)| self.hat[u][k].saturating_sub(self.hat[a][k]))
                .min()
                == Some(0)
        })
    }

    /// `⋁ X̂` pointwise, as numerators.
    fn sup_hat(&self, x: &[usize]) -> Vec<u64> {
        (0..self.spectrum())
            .map(|k| x.iter().map(|&a| self.hat[a][k]).max().unwrap_or(0))
            .collect()
    }

    /// `⋀ Ŷ*` pointwise, as numerators.
    fn inf_neg_hat(&self, y: &[usize]) -> Vec<u64> {
        (0..self.spectrum())
            .map(|k| y.iter().map(|&e| self.grid - self.hat[e][k]).min().unwrap_or(self.grid))
            .collect()
    }

    /// Index from `⋀ Ŷ*` to the first cut `Y` attaining it.
    pub fn dual_index(&self, all_cuts: &[Vec<usize>]) -> HashMap<Vec<u64>, usize> {
        let mut index = HashMap::new();
        for (i, y) in all_cuts.iter().enumerate() {
            index.entry(self.inf_neg_hat(y)).or_insert(i);
        }
        index
    }

    /// Some cut `Y` has `⋁ X̂ = ⋀ Ŷ*`; returns its position in `all_cuts`.
    pub fn dual_cut(&self, x: &[usize], index: &HashMap<Vec<u64>, usize>) -> Option<usize> {
        index.get(&self.sup_hat(x)).copied()
    }

    /// Least upper bound of `X` inside the carrier.
    pub fn supremum(&self, x: &[usize]) -> Option<usize> {
        let ux: Vec<usize> = self.bounds.upper(x).ones().collect();
        ux.iter().copied().find(|&s| ux.iter().all(|&u| self.b.le(s, u)))
    }
}

/// Outcome of the limit-cut completeness check.
#[derive(Clone, Debug, Serialize)]
pub struct LccReport {
    pub cuts: usize,
    pub limit_cuts: usize,
    /// Every limit cut has a supremum in the carrier.
    pub suprema_exist: bool,
    /// The direct limit-cut test agrees with the dual-cut characterization on
    /// every cut, and every dual cut found is itself a limit cut.
    pub characterization_agrees: bool,
}

impl LccReport {
    pub fn is_lcc(&self) -> bool {
        self.suprema_exist
    }
}

pub fn is_lcc(b: &FinAlgebra, limit: usize) -> Result<LccReport> {
    if b.len() > limit {
        return Err(Error::SizeGuard {
            what: "carrier",
            size: b.len(),
            limit,
        });
    }
    let analysis = CutAnalysis::new(b)?;
    let all = cuts(b, limit)?;
    let index = analysis.dual_index(&all);
    let mut report = LccReport {
        cuts: all.len(),
        limit_cuts: 0,
        suprema_exist: true,
        characterization_agrees: true,
    };
    for x in &all {
        let limit_cut = analysis.is_limit_cut(x);
        let dual = analysis.dual_cut(x, &index);
        if limit_cut != dual.is_some() || dual.is_some_and(|y| !analysis.is_limit_cut(&all[y])) {
            report.characterization_agrees = false;
        }
        if limit_cut {
            report.limit_cuts += 1;
            if analysis.supremum(x).is_none() {
                report.suprema_exist = false;
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{find_isomorphism, Element, FinAlgebra};
    use crate::samples;

    fn q(s: &str) -> UnitRational {
        s.parse().unwrap()
    }

    fn set(b: &FinAlgebra, rows: &[&[&str]]) -> Ideal {
        Ideal::new(
            rows.iter()
                .map(|r| {
                    b.index_of(&Element::Tuple(r.iter().map(|v| q(v)).collect()))
                        .unwrap_or_else(|| panic!("{r:?} not in carrier"))
                })
                .collect(),
        )
    }

    /// Independent ideal enumeration: every subset passing the axioms.
    fn ideals_by_subsets(b: &FinAlgebra) -> Vec<Ideal> {
        let mut out: Vec<Ideal> = (0u32..1 << b.len())
            .map(|mask| (0..b.len()).filter(|&i| mask >> i & 1 == 1).collect::<Vec<_>>())
            .filter(|m| check_ideal(b, m).is_ok())
            .map(Ideal::new)
            .collect();
        out.sort();
        out
    }

    #[test]
    fn maximal_ideals_of_l2x2() {
        let p = FinAlgebra::full_product(&[2, 2]).unwrap();
        let max = maximal_ideals(&p).unwrap();
        assert_eq!(
            max,
            vec![
                set(&p, &[&["0", "0"], &["0", "1/2"], &["0", "1"]]),
                set(&p, &[&["0", "0"], &["1/2", "0"], &["1", "0"]]),
            ]
        );
        assert!(is_semisimple(&p).unwrap());
    }

    #[test]
    fn chains_are_simple() {
        for n in 1..7 {
            let c = FinAlgebra::chain(n).unwrap();
            assert_eq!(maximal_ideals(&c).unwrap(), vec![Ideal::new(vec![0])]);
            assert_eq!(all_ideals(&c).len(), 2);
        }
        assert!(matches!(
            maximal_ideals(&FinAlgebra::product(&[]).unwrap()),
            Err(Error::TrivialAlgebra)
        ));
    }

    #[test]
    fn ideal_enumeration_matches_subset_filter() {
        for chains in [vec![2, 2], vec![1, 3], vec![1, 1, 1], vec![4]] {
            let p = FinAlgebra::full_product(&chains).unwrap();
            assert_eq!(all_ideals(&p), ideals_by_subsets(&p), "{chains:?}");
        }
        let a = samples::l2x2_positive();
        assert_eq!(all_ideals(&a), ideals_by_subsets(&a));
    }

    #[test]
    fn maximal_ideals_of_l223() {
        let e = FinAlgebra::full_product(&[2, 2, 3]).unwrap();
        let max = maximal_ideals(&e).unwrap();
        assert_eq!(max.len(), 3);
        for (k, m) in max.iter().enumerate() {
            let expected: Vec<usize> = (0..e.len()).filter(|&x| e.tuple(x).unwrap()[k].is_zero()).collect();
            assert_eq!(m.members(), expected.as_slice());
        }
    }

    #[test]
    fn quotients() {
        let p = FinAlgebra::full_product(&[2, 2]).unwrap();
        let zero = Ideal::new(vec![p.zero()]);
        let same = quotient(&p, &zero).unwrap();
        assert!(find_isomorphism(&p, &same.algebra).is_some());

        let max = maximal_ideals(&p).unwrap();
        let by_first = quotient(&p, &max[0]).unwrap();
        assert!(find_isomorphism(&by_first.algebra, &FinAlgebra::chain(2).unwrap()).is_some());
        // (1/2, 1) lands in the class of (1/2, 0)
        let x = set(&p, &[&["1/2", "1"]]).members()[0];
        let y = set(&p, &[&["1/2", "0"]]).members()[0];
        assert_eq!(by_first.projection.images[x], by_first.projection.images[y]);

        let whole = Ideal::new((0..p.len()).collect());
        let t = quotient(&p, &whole).unwrap();
        assert_eq!(t.algebra.len(), 1);

        let not_ideal = set(&p, &[&["0", "0"], &["0", "1"]]);
        assert!(matches!(quotient(&p, &not_ideal), Err(Error::NotAnIdeal(_))));
    }

    #[test]
    fn representation_of_l2x2() {
        let p = FinAlgebra::full_product(&[2, 2]).unwrap();
        let rep = belluce_embedding(&p).unwrap();
        let a = set(&p, &[&["1/2", "1"]]).members()[0];
        // classes modulo I₁ agree on the first coordinate
        assert_eq!(rep.hats[a], vec![q("1/2"), q("1")]);
        assert_eq!(rep.hats[p.zero()], vec![q("0"), q("0")]);
        let c = FinAlgebra::chain(5).unwrap();
        let rc = belluce_embedding(&c).unwrap();
        for x in 0..c.len() {
            assert_eq!(rc.hats[x], vec![c.tuple(x).unwrap()[0].clone()]);
        }
    }

    #[test]
    fn non_semisimple_is_rejected() {
        let t = samples::l2_tables();
        assert!(belluce_embedding(&t).is_ok());
        let a = samples::l2x2_positive();
        assert!(matches!(belluce_embedding(&a), Err(Error::Signature(_))));
    }

    #[test]
    fn homs_pair_with_maximal_ideals() {
        for chains in [vec![2, 2], vec![5], vec![1, 2, 3], vec![2, 2, 3]] {
            let p = FinAlgebra::full_product(&chains).unwrap();
            let pairs = hom_ideal_bijection(&p).unwrap();
            assert_eq!(pairs.len(), chains.len());
        }
    }

    #[test]
    fn traces_for_l2x2_example() {
        let p = FinAlgebra::full_product(&[2, 2]).unwrap();
        let a = samples::l2x2_positive();
        let m = max_le(&a, &p).unwrap();
        assert_eq!(m.traces[0], set(&a, &[&["0", "0"], &["0", "1/2"], &["0", "1"]]));
        assert_eq!(m.traces[1], set(&a, &[&["0", "0"]]));
        assert!(m.order.holds(1, 0) && !m.order.holds(0, 1));
        // the smaller trace is not maximal in A
        assert!(!maximal_ideals(&a).unwrap().contains(&m.traces[1]));
    }

    #[test]
    fn full_algebra_traces_form_an_antichain() {
        let p = FinAlgebra::full_product(&[2, 3]).unwrap();
        let m = max_le(&p.reduct(), &p).unwrap();
        assert!(m.order.is_discrete());
        assert_eq!(m.traces, maximal_ideals(&p).unwrap());
    }

    #[test]
    fn cut_enumerations_agree() {
        for chains in [vec![2, 2], vec![1, 3], vec![3], vec![1, 1, 1]] {
            let p = FinAlgebra::full_product(&chains).unwrap();
            assert_eq!(cuts(&p, CUT_LIMIT).unwrap(), cuts_brute_force(&p).unwrap());
        }
    }

    #[test]
    fn cut_examples() {
        let p = FinAlgebra::full_product(&[2, 2]).unwrap();
        assert!(is_cut(&p, &[p.zero()]));
        let all: Vec<usize> = (0..p.len()).collect();
        assert!(is_cut(&p, &all));
        assert_eq!(upper_bounds(&p, &all), vec![p.one()]);
        let analysis = CutAnalysis::new(&p).unwrap();
        assert!(analysis.is_limit_cut(&all));
        assert_eq!(analysis.supremum(&all), Some(p.one()));
        assert!(analysis.is_limit_cut(&[p.zero()]));
        assert!(!is_cut(&p, &[p.one()]));
    }

    #[test]
    fn finite_algebras_are_lcc() {
        for chains in [vec![2, 2], vec![4], vec![1, 2, 3]] {
            let p = FinAlgebra::full_product(&chains).unwrap();
            let r = is_lcc(&p, CUT_LIMIT).unwrap();
            assert!(r.is_lcc() && r.characterization_agrees);
            assert_eq!(r.cuts, p.len());
        }
        let big = FinAlgebra::full_product(&[4, 4, 4]).unwrap();
        assert!(matches!(is_lcc(&big, CUT_LIMIT), Err(Error::SizeGuard { .. })));
    }
}
