//! The ordered set of homomorphisms into `[0,1]`, the relation a positive
//! subreduct induces on the homs of the algebra it generates, and
//! H-completeness.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::algebra::{
    enumerate_homs, extend_hom, generated_ambient, FinAlgebra, Generated, Hom, HomSet, Signature,
};
use crate::error::{Error, Result};
use crate::ideal::{hom_ideal_bijection, max_le};
use crate::poset::{find_isomorphism, Relation};
use crate::term::{synthesize_separator, Term};

/// Default carrier limit for the superset search of [`is_h_complete`].
pub const H_COMPLETE_LIMIT: usize = 64;

/// Homs in canonical order with their pointwise order.
#[derive(Clone, Debug)]
pub struct HomPoset {
    pub homs: Vec<Hom>,
    pub order: Relation,
    pub bound: u64,
    pub possibly_incomplete: bool,
}

impl HomPoset {
    pub fn from_homs(set: HomSet) -> HomPoset {
        let order = Relation::from_fn(set.homs.len(), |i, j| set.homs[i].le(&set.homs[j]));
        HomPoset {
            homs: set.homs,
            order,
            bound: set.bound,
            possibly_incomplete: set.possibly_incomplete,
        }
    }

    pub fn len(&self) -> usize {
        self.homs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.homs.is_empty()
    }

    pub fn labels(&self) -> Vec<String> {
        (0..self.len()).map(|i| format!("f{i}")).collect()
    }

    pub fn to_dot(&self) -> String {
        self.order.to_dot("homs", "f", &self.labels())
    }
}

pub fn hom_poset(a: &FinAlgebra) -> Result<HomPoset> {
    Ok(HomPoset::from_homs(enumerate_homs(a, None)?))
}

/// The relation `≼_A` on the homs of the generated algebra `B`:
/// `(i, j)` holds iff `g_i` restricted to `A` is below `g_j` restricted to `A`.
#[derive(Clone, Debug)]
pub struct CompatRelation {
    pub relation: Relation,
    /// Homs of `B` in canonical order.
    pub ambient_homs: Vec<Hom>,
    /// For each hom of `B`, the index of its restriction among `A`'s homs.
    pub restriction: Vec<usize>,
}

/// Homs of the generated algebra, with its element index for each element of
/// the subreduct.
struct Setting {
    generated: Generated,
    ambient_homs: Vec<Hom>,
}

fn setting(a: &FinAlgebra, b: &FinAlgebra) -> Result<Setting> {
    let generated = generated_ambient(a, b)?;
    let ambient_homs = enumerate_homs(&generated.algebra, None)?.homs;
    Ok(Setting {
        generated,
        ambient_homs,
    })
}

fn restrict(h: &Hom, seeds: &[usize]) -> Hom {
    Hom::new(seeds.iter().map(|&s| h.value(s).clone()).collect())
}

/// `≼_A`, computed by extending every hom of `A` to `B` and matching it with
/// the homs of `B`; the restriction map is checked to be the inverse.
pub fn compat_relation(a: &FinAlgebra, b: &FinAlgebra) -> Result<CompatRelation> {
    let s = setting(a, b)?;
    let a_homs = enumerate_homs(a, None)?.homs;
    let witnesses = s.generated.witnesses()?;
    let position: HashMap<&Hom, usize> = s.ambient_homs.iter().enumerate().map(|(i, h)| (h, i)).collect();
    let mut restriction = vec![usize::MAX; s.ambient_homs.len()];
    for (k, f) in a_homs.iter().enumerate() {
        let ext = extend_hom(f, &s.generated, &witnesses)?;
        let i = *position
            .get(&ext)
            .ok_or_else(|| Error::Invariant("extension is not a hom of the generated algebra".into()))?;
        if restriction[i] != usize::MAX {
            return Err(Error::Invariant("two homs extend to the same hom".into()));
        }
        restriction[i] = k;
    }
    for (i, g) in s.ambient_homs.iter().enumerate() {
        let k = restriction[i];
        if k == usize::MAX || a_homs[k] != restrict(g, &s.generated.seeds) {
            return Err(Error::Invariant("restriction and extension are not inverse".into()));
        }
    }
    let relation = Relation::from_fn(s.ambient_homs.len(), |i, j| a_homs[restriction[i]].le(&a_homs[restriction[j]]));
    Ok(CompatRelation {
        relation,
        ambient_homs: s.ambient_homs,
        restriction,
    })
}

/// `≼` for the element set `members` (indices of `b`), by restricting the
/// homs of `b` directly.
pub fn restricted_relation(ambient_homs: &[Hom], members: &[usize]) -> Relation {
    Relation::from_fn(ambient_homs.len(), |i, j| {
        members.iter().all(|&m| ambient_homs[i].value(m) <= ambient_homs[j].value(m))
    })
}

pub fn are_compatible(a: &FinAlgebra, other: &FinAlgebra, b: &FinAlgebra) -> Result<bool> {
    Ok(compat_relation(a, b)?.relation == compat_relation(other, b)?.relation)
}

/// Compatibility read off the traces of the maximal ideals: `A` and `E` are
/// compatible iff their trace posets coincide under the common indexing by
/// maximal ideals of `B`. Also reports whether the trace posets are merely
/// isomorphic as abstract posets.
#[derive(Clone, Debug, Serialize)]
pub struct TraceComparison {
    pub same_under_index: bool,
    pub abstractly_isomorphic: bool,
}

pub fn compare_traces(a: &FinAlgebra, other: &FinAlgebra, b: &FinAlgebra) -> Result<TraceComparison> {
    let ta = max_le(a, b)?;
    let te = max_le(other, b)?;
    Ok(TraceComparison {
        same_under_index: ta.order == te.order,
        abstractly_isomorphic: find_isomorphism(&ta.order, &te.order).is_some(),
    })
}

/// Why `f_i ≰ f_j` forces `f_j⁻¹[0] ⊄ f_i⁻¹[0]`: with `f_i(a) > f_j(a)`,
/// the separator `t` sends `f_j(a)` to 0 and `f_i(a)` to 1, so `t(a)` lies in
/// the second zero set only.
#[derive(Clone, Debug, Serialize)]
pub struct KernelWitness {
    pub element: usize,
    pub separator: String,
    pub image: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelPair {
    pub i: usize,
    pub j: usize,
    pub le: bool,
    pub kernel_included: bool,
    pub witness: Option<KernelWitness>,
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelReport {
    pub pairs: Vec<KernelPair>,
}

impl KernelReport {
    /// `f_i ≤ f_j ⇔ f_j⁻¹[0] ⊆ f_i⁻¹[0]` for every pair, with valid witnesses.
    pub fn holds(&self) -> bool {
        self.pairs
            .iter()
            .all(|p| p.le == p.kernel_included && (p.le || p.witness.is_some()))
    }
}

pub fn order_vs_kernels(a: &FinAlgebra, hp: &HomPoset) -> Result<KernelReport> {
    let zero_sets: Vec<Vec<usize>> = hp.homs.iter().map(Hom::zero_set).collect();
    let mut pairs = Vec::new();
    for i in 0..hp.len() {
        for j in 0..hp.len() {
            let le = hp.order.holds(i, j);
            let kernel_included = zero_sets[j].iter().all(|x| zero_sets[i].binary_search(x).is_ok());
            let witness = if le {
                None
            } else {
                let (fi, fj) = (&hp.homs[i], &hp.homs[j]);
                let element = (0..a.len())
                    .find(|&x| fi.value(x) > fj.value(x))
                    .ok_or_else(|| Error::Invariant("incomparable homs without a witness".into()))?;
                let sep = synthesize_separator(fj.value(element), fi.value(element))?;
                let image = a.eval_term(&sep.term, &[element])?;
                let valid = sep.term.is_neg_free()
                    && fj.value(image).is_zero()
                    && fi.value(image).is_one()
                    && eval_unary(&sep.term, fi.value(element))?.is_one();
                if !valid {
                    return Err(Error::Invariant("separator does not witness the kernel gap".into()));
                }
                Some(KernelWitness {
                    element,
                    separator: sep.term.to_string(),
                    image,
                })
            };
            pairs.push(KernelPair {
                i,
                j,
                le,
                kernel_included,
                witness,
            });
        }
    }
    Ok(KernelReport { pairs })
}

fn eval_unary(t: &Term, x: &crate::UnitRational) -> Result<crate::UnitRational> {
    t.eval(std::slice::from_ref(x))
}

/// Outcome of the H-completeness search.
#[derive(Clone, Debug)]
pub struct HCompleteness {
    pub complete: bool,
    /// Smallest strictly larger compatible subreduct (ties broken by element
    /// list), when not complete.
    pub certificate: Option<FinAlgebra>,
    /// Number of distinct proper supersets examined.
    pub explored: usize,
    /// Every strictly larger compatible subreduct found.
    pub compatible_supersets: usize,
}

/// Whether no positive subreduct of `b` strictly containing `a` induces the
/// same relation on the homs of `b`.
///
/// Supersets are explored by adding one element and closing. Incompatible
/// supersets are not expanded further: enlarging a subreduct can only shrink
/// its relation.
pub fn is_h_complete(a: &FinAlgebra, b: &FinAlgebra, limit: usize) -> Result<HCompleteness> {
    if b.len() > limit {
        return Err(Error::SizeGuard {
            what: "ambient carrier",
            size: b.len(),
            limit,
        });
    }
    let s = setting(a, b)?;
    let ambient = &s.generated.algebra;
    let start: Vec<usize> = {
        let mut v = s.generated.seeds.clone();
        v.sort_unstable();
        v
    };
    let target = restricted_relation(&s.ambient_homs, &start);
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    let mut compatible: Vec<Vec<usize>> = Vec::new();
    while let Some(current) = queue.pop_front() {
        for x in 0..ambient.len() {
            if current.binary_search(&x).is_ok() {
                continue;
            }
            let mut seed = current.clone();
            seed.push(x);
            let next = ambient.close(&seed, Signature::Mvlat);
            if !seen.insert(next.clone()) {
                continue;
            }
            if restricted_relation(&s.ambient_homs, &next) == target {
                compatible.push(next.clone());
                queue.push_back(next);
            }
        }
    }
    let explored = seen.len() - 1;
    let best = compatible.iter().min_by(|p, q| p.len().cmp(&q.len()).then_with(|| p.cmp(q)));
    let certificate = match best {
        Some(members) => Some(ambient.restrict(members, Signature::Mvlat)?),
        None => None,
    };
    Ok(HCompleteness {
        complete: certificate.is_none(),
        certificate,
        explored,
        compatible_supersets: compatible.len(),
    })
}

/// Pairs each hom of `b` with the maximal ideal that is its zero set, and
/// relabels `≼_A` onto maximal ideals; useful to compare with [`max_le`].
pub fn relation_on_maximal_ideals(a: &FinAlgebra, b: &FinAlgebra) -> Result<Relation> {
    let compat = compat_relation(a, b)?;
    let g = generated_ambient(a, b)?;
    let pairs = hom_ideal_bijection(&g.algebra)?;
    Ok(compat.relation.relabel(&pairs))
}
