//! The dual ordered space of an MV-lattice, the algebra of increasing
//! clopens of an ordered space, the natural maps between them, and the
//! comparison with the maximal spectrum of an MV-algebra.

use std::collections::{BTreeMap, HashMap};

use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::algebra::{
    enumerate_homs, generate_tuples, AlgebraMap, Element, FinAlgebra, Generated, Hom, Signature,
};
use crate::error::{Error, Result};
use crate::ideal::{belluce_embedding, is_lcc, is_semisimple, Ideal};
use crate::mvtop::{
    is_bijection, is_continuous, is_homeomorphism, is_open_map, is_order_embedding, preimage, FuzzySubset, Generation, MVTopology,
};
use crate::order::is_h_complete;
use crate::poset::Relation;
use crate::UnitRational;

/// Size limits for the exhaustive sub-checks.
#[derive(Copy, Clone, Debug)]
pub struct Limits {
    pub carrier: usize,
    pub opens: usize,
}

impl Default for Limits {
    fn default() -> Limits {
        Limits {
            carrier: crate::order::H_COMPLETE_LIMIT,
            opens: crate::mvtop::OPENS_LIMIT,
        }
    }
}

/// The ordered MV-space of an MV-lattice: points are its homs into `[0,1]`,
/// ordered pointwise, with the topology generated by the algebra `⟨Ã⟩`.
#[derive(Clone, Debug)]
pub struct DualSpace {
    pub space: MVTopology,
    pub homs: Vec<Hom>,
    /// `ã` for every element `a`, in the source's element order.
    pub tilde: Vec<FuzzySubset>,
    /// `⟨Ã⟩` as tuples over the points.
    pub clopen_algebra: Generated,
    /// The homs separate elements, so `a ↦ ã` is injective.
    pub separating: bool,
    pub possibly_incomplete: bool,
}

impl DualSpace {
    /// `Ã` as a positive subreduct of `⟨Ã⟩`.
    pub fn tilde_algebra(&self) -> Result<FinAlgebra> {
        let chains = self.clopen_algebra.algebra.chains().to_vec();
        FinAlgebra::from_tuples(chains, self.tilde.iter().map(FuzzySubset::values).collect(), Signature::Mvlat)
    }
}

fn point_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("f{i}")).collect()
}

fn positive(a: &FinAlgebra) -> FinAlgebra {
    match a.signature() {
        Signature::Mv => a.reduct(),
        Signature::Mvlat => a.clone(),
    }
}

pub fn upsilon(a: &FinAlgebra, limits: Limits) -> Result<DualSpace> {
    let a = positive(a);
    let homs = enumerate_homs(&a, None)?;
    let grid = homs.bound;
    let n = homs.len();
    let tilde: Vec<FuzzySubset> = (0..a.len())
        .map(|x| FuzzySubset::from_values(grid, &homs.homs.iter().map(|h| h.value(x).clone()).collect::<Vec<_>>()))
        .collect::<Result<_>>()?;
    let separating = crate::algebra::kernel_intersection_is_diagonal(&a, &homs.homs);
    let clopen_algebra = generate_tuples(
        &vec![grid; n],
        &tilde.iter().map(FuzzySubset::values).collect::<Vec<_>>(),
        Signature::Mv,
    )?;
    let base: Vec<FuzzySubset> = (0..clopen_algebra.algebra.len())
        .map(|i| FuzzySubset::from_values(grid, clopen_algebra.algebra.tuple(i).expect("tuples")))
        .collect::<Result<_>>()?;
    let order = Relation::from_fn(n, |i, j| homs.homs[i].le(&homs.homs[j]));
    let space = MVTopology::generate(point_names(n), grid, &base, Generation::Base, Some(order), limits.opens)?;
    Ok(DualSpace {
        space,
        homs: homs.homs,
        tilde,
        clopen_algebra,
        separating,
        possibly_incomplete: homs.possibly_incomplete,
    })
}

/// `h ↦ h ∘ q` from the points of `Υ(C)` to the points of `Υ(A)`, checked
/// continuous and order-preserving.
pub fn upsilon_on_morphism(
    q: &AlgebraMap,
    a: &FinAlgebra,
    c: &FinAlgebra,
    dual_a: &DualSpace,
    dual_c: &DualSpace,
) -> Result<Vec<usize>> {
    q.verify(&positive(a), &positive(c))?;
    let position: HashMap<&Hom, usize> = dual_a.homs.iter().enumerate().map(|(i, h)| (h, i)).collect();
    let map = dual_c
        .homs
        .iter()
        .map(|h| {
            let composed = Hom::new(q.images.iter().map(|&y| h.value(y).clone()).collect());
            position
                .get(&composed)
                .copied()
                .ok_or_else(|| Error::Invariant("composite is not a hom of the source".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let order_ok = {
        let (oc, oa) = (
            dual_c.space.order().expect("dual spaces are ordered"),
            dual_a.space.order().expect("dual spaces are ordered"),
        );
        oc.pairs().iter().all(|&(x, y)| oa.holds(map[x], map[y]))
    };
    if !order_ok || !is_continuous(&map, &dual_c.space, &dual_a.space) {
        return Err(Error::Invariant("dual map is not a continuous monotone map".into()));
    }
    Ok(map)
}

/// Increasing clopens of an ordered space as an MV-lattice of tuples.
pub fn clop_up(x: &MVTopology) -> Result<FinAlgebra> {
    let members = x.increasing_clopens()?;
    FinAlgebra::from_tuples(
        vec![x.grid(); x.point_count()],
        members.iter().map(FuzzySubset::values).collect(),
        Signature::Mvlat,
    )
}

/// Clopens (without the monotonicity requirement) as an MV-lattice.
pub fn clop(x: &MVTopology) -> Result<FinAlgebra> {
    FinAlgebra::from_tuples(
        vec![x.grid(); x.point_count()],
        x.clopens().iter().map(FuzzySubset::values).collect(),
        Signature::Mvlat,
    )
}

fn tuple_index(alg: &FinAlgebra, values: Vec<UnitRational>) -> Option<usize> {
    alg.index_of(&Element::Tuple(values))
}

/// `Clop↑ f`: preimage along `f: X → Y`, from `Clop↑ Y` to `Clop↑ X`.
pub fn clop_up_on_morphism(f: &[usize], x: &MVTopology, y: &MVTopology) -> Result<AlgebraMap> {
    let (cx, cy) = (clop_up(x)?, clop_up(y)?);
    let images = (0..cy.len())
        .map(|i| {
            let beta = FuzzySubset::from_values(y.grid(), cy.tuple(i).expect("tuples"))?;
            tuple_index(&cx, preimage(f, &beta).values())
                .ok_or_else(|| Error::InvalidMap("preimage is not an increasing clopen".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let map = AlgebraMap { images };
    map.verify(&cy, &cx)?;
    Ok(map)
}

/// `η_X : x ↦ f_x`, with `f_x(α) = α(x)` on `Clop↑ X`.
#[derive(Clone, Debug)]
pub struct Unit {
    pub clop_up: FinAlgebra,
    pub dual: DualSpace,
    /// `images[x]` is the point of the dual representing `f_x`.
    pub images: Vec<usize>,
}

pub fn unit(x: &MVTopology, limits: Limits) -> Result<Unit> {
    let a = clop_up(x)?;
    let dual = upsilon(&a, limits)?;
    let position: HashMap<&Hom, usize> = dual.homs.iter().enumerate().map(|(i, h)| (h, i)).collect();
    let images = (0..x.point_count())
        .map(|p| {
            let fx = Hom::new((0..a.len()).map(|e| a.tuple(e).expect("tuples")[p].clone()).collect());
            position
                .get(&fx)
                .copied()
                .ok_or_else(|| Error::Invariant("evaluation at a point is not a hom".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Unit {
        clop_up: a,
        dual,
        images,
    })
}

/// `ε_A : a ↦ ã`, into `Clop↑ Υ(A)`.
#[derive(Clone, Debug)]
pub struct Counit {
    pub dual: DualSpace,
    pub clop_up: FinAlgebra,
    pub map: AlgebraMap,
}

pub fn counit(a: &FinAlgebra, limits: Limits) -> Result<Counit> {
    let source = positive(a);
    let dual = upsilon(&source, limits)?;
    let target = clop_up(&dual.space)?;
    let images = dual
        .tilde
        .iter()
        .map(|t| {
            tuple_index(&target, t.values()).ok_or_else(|| Error::Invariant("ã is not an increasing clopen".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let map = AlgebraMap { images };
    map.verify(&source, &target)?;
    Ok(Counit {
        dual,
        clop_up: target,
        map,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TriangleReport {
    /// `(Clop↑ η_X) ∘ ε_{Clop↑ X} = id`.
    pub algebra_side: bool,
    /// `(Υ ε_A) ∘ η_{Υ A} = id`.
    pub space_side: bool,
}

impl TriangleReport {
    pub fn holds(&self) -> bool {
        self.algebra_side && self.space_side
    }
}

/// The triangle on the algebra side, for the ordered space `x`.
pub fn triangle_on_clop_up(x: &MVTopology, limits: Limits) -> Result<bool> {
    let eta = unit(x, limits)?;
    let eps = counit(&eta.clop_up, limits)?;
    // Clop↑ η_X pulls an increasing clopen of the dual back along η_X.
    let back = clop_up_on_morphism(&eta.images, x, &eta.dual.space)?;
    if clop_up(&eta.dual.space)? != eps.clop_up {
        return Err(Error::Invariant("dual computed twice differs".into()));
    }
    let composite = eps.map.then(&back);
    Ok(composite == AlgebraMap::identity(eta.clop_up.len()))
}

/// The triangle on the space side, for the MV-lattice `a`.
pub fn triangle_on_upsilon(a: &FinAlgebra, limits: Limits) -> Result<bool> {
    let eps = counit(a, limits)?;
    let eta = unit(&eps.dual.space, limits)?;
    if eta.clop_up != eps.clop_up {
        return Err(Error::Invariant("increasing clopens computed twice differ".into()));
    }
    // Υ ε_A sends a hom h of Clop↑ Υ(A) to h ∘ ε_A.
    let upsilon_eps = upsilon_on_morphism(&eps.map, a, &eps.clop_up, &eps.dual, &eta.dual)?;
    let composite: Vec<usize> = eta.images.iter().map(|&p| upsilon_eps[p]).collect();
    Ok(composite == (0..eps.dual.homs.len()).collect::<Vec<_>>())
}

pub fn check_triangles(x: &MVTopology, a: &FinAlgebra, limits: Limits) -> Result<TriangleReport> {
    Ok(TriangleReport {
        algebra_side: triangle_on_clop_up(x, limits)?,
        space_side: triangle_on_upsilon(a, limits)?,
    })
}

/// Sub-check results of the duality verdict, plus certificates.
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub lcc: bool,
    pub h_complete: bool,
    pub counit_iso: bool,
    pub unit_order_homeo: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub priestley: Option<bool>,
    pub certificates: Certificates,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Certificates {
    /// Names of failed sub-checks.
    pub failed: Vec<String>,
    /// Strictly larger compatible subreduct of `⟨Ã⟩`, as element tuples.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub enlargement: Option<Vec<String>>,
    /// `ε_A` as element pairs, when it is a bijection.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counit: Option<BTreeMap<String, String>>,
    /// `η` as point pairs, when it is a bijection.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unit: Option<BTreeMap<String, String>>,
    /// Set for checks that hold automatically on finite inputs.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub vacuous: Vec<String>,
    pub cuts: usize,
    pub supersets_explored: usize,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.lcc && self.h_complete && self.counit_iso && self.unit_order_homeo && self.priestley.unwrap_or(true)
    }

    fn finish(mut self) -> Verdict {
        let mut failed = Vec::new();
        for (name, ok) in [
            ("lcc", self.lcc),
            ("h_complete", self.h_complete),
            ("counit_iso", self.counit_iso),
            ("unit_order_homeo", self.unit_order_homeo),
            ("priestley", self.priestley.unwrap_or(true)),
        ] {
            if !ok {
                failed.push(name.to_string());
            }
        }
        self.certificates.failed = failed;
        self
    }
}

/// Whether `η` on `space` is a bijective homeomorphism that preserves and
/// reflects the order; returns the point pairs when it is.
fn unit_is_order_homeo(space: &MVTopology, limits: Limits) -> Result<(bool, Option<BTreeMap<String, String>>)> {
    let eta = unit(space, limits)?;
    let target = &eta.dual.space;
    let ok = is_bijection(&eta.images, target.point_count())
        && is_continuous(&eta.images, space, target)
        && is_open_map(&eta.images, space, target)
        && is_order_embedding(
            &eta.images,
            space.order().expect("ordered"),
            target.order().expect("ordered"),
        );
    let pairs = ok.then(|| {
        eta.images
            .iter()
            .enumerate()
            .map(|(x, &y)| (space.points()[x].clone(), target.points()[y].clone()))
            .collect()
    });
    Ok((ok, pairs))
}

/// Algebra-side verdict: `⟨Ã⟩` is lcc, `Ã` is H-complete in it, `ε_A` is an
/// isomorphism onto `Clop↑ Υ(A)`, and `η` on `Υ(A)` is an order
/// homeomorphism.
pub fn check_duality(a: &FinAlgebra, limits: Limits) -> Result<Verdict> {
    let source = positive(a);
    let eps = counit(&source, limits)?;
    if !eps.dual.separating {
        return Err(Error::InvalidAlgebra(
            "homs into [0,1] do not separate elements; the dual only sees a quotient".into(),
        ));
    }
    let generated = &eps.dual.clopen_algebra.algebra;
    let lcc = is_lcc(generated, limits.carrier.max(generated.len()))?;
    let tilde = eps.dual.tilde_algebra()?;
    let h = is_h_complete(&tilde, generated, limits.carrier)?;
    let counit_iso = eps.map.is_injective() && eps.map.is_surjective(eps.clop_up.len());
    let (unit_ok, unit_pairs) = unit_is_order_homeo(&eps.dual.space, limits)?;
    let counit_pairs = counit_iso.then(|| {
        eps.map
            .images
            .iter()
            .enumerate()
            .map(|(x, &y)| (source.element(x).to_string(), eps.clop_up.element(y).to_string()))
            .collect()
    });
    let enlargement = h
        .certificate
        .as_ref()
        .map(|e| e.elements().iter().map(ToString::to_string).collect());
    Ok(Verdict {
        lcc: lcc.is_lcc() && lcc.characterization_agrees,
        h_complete: h.complete,
        counit_iso,
        unit_order_homeo: unit_ok,
        priestley: None,
        certificates: Certificates {
            enlargement,
            counit: counit_pairs,
            unit: unit_pairs,
            cuts: lcc.cuts,
            supersets_explored: h.explored,
            ..Default::default()
        },
    }
    .finish())
}

/// Space-side verdict: Priestley, `Clop↑ X` lcc (automatic here) and
/// H-complete in the algebra it generates, and `η_X` an order homeomorphism.
pub fn check_duality_space(x: &MVTopology, limits: Limits) -> Result<Verdict> {
    let priestley = x.priestley(limits.opens)?.holds();
    let a = clop_up(x)?;
    let generated = generate_tuples(
        a.chains(),
        &(0..a.len()).map(|i| a.tuple(i).expect("tuples").to_vec()).collect::<Vec<_>>(),
        Signature::Mv,
    )?;
    let lcc = is_lcc(&generated.algebra, limits.carrier.max(generated.algebra.len()))?;
    let h = is_h_complete(&a, &generated.algebra, limits.carrier)?;
    let (unit_ok, unit_pairs) = unit_is_order_homeo(x, limits)?;
    Ok(Verdict {
        lcc: lcc.is_lcc() && lcc.characterization_agrees,
        h_complete: h.complete,
        counit_iso: counit(&a, limits).map(|c| c.map.is_surjective(c.clop_up.len()) && c.map.is_injective())?,
        unit_order_homeo: unit_ok,
        priestley: Some(priestley),
        certificates: Certificates {
            enlargement: h
                .certificate
                .as_ref()
                .map(|e| e.elements().iter().map(ToString::to_string).collect()),
            unit: unit_pairs,
            vacuous: vec!["lcc".into()],
            cuts: lcc.cuts,
            supersets_explored: h.explored,
            ..Default::default()
        },
    }
    .finish())
}

/// An order-preserving and order-reflecting homeomorphism `x → y`, by
/// backtracking over point bijections.
pub fn find_order_homeomorphism(x: &MVTopology, y: &MVTopology, limit: usize) -> Result<Option<Vec<usize>>> {
    let n = x.point_count();
    if n > limit {
        return Err(Error::SizeGuard {
            what: "points",
            size: n,
            limit,
        });
    }
    if n != y.point_count() || x.opens().len() != y.opens().len() {
        return Ok(None);
    }
    let trivial_x = Relation::identity(n);
    let trivial_y = Relation::identity(y.point_count());
    let (ox, oy) = (x.order().unwrap_or(&trivial_x), y.order().unwrap_or(&trivial_y));
    fn extend(
        map: &mut Vec<usize>,
        used: &mut [bool],
        ox: &Relation,
        oy: &Relation,
        x: &MVTopology,
        y: &MVTopology,
    ) -> bool {
        let p = map.len();
        if p == used.len() {
            return is_homeomorphism(map, x, y);
        }
        for q in 0..used.len() {
            if used[q] {
                continue;
            }
            let fits = (0..p).all(|r| ox.holds(r, p) == oy.holds(map[r], q) && ox.holds(p, r) == oy.holds(q, map[r]));
            if !fits {
                continue;
            }
            used[q] = true;
            map.push(q);
            if extend(map, used, ox, oy, x, y) {
                return true;
            }
            map.pop();
            used[q] = false;
        }
        false
    }
    let mut map = Vec::with_capacity(n);
    let mut used = vec![false; n];
    Ok(extend(&mut map, &mut used, ox, oy, x, y).then_some(map))
}

/// Comparison of the dual of an MV-algebra with its maximal spectrum.
#[derive(Clone, Debug, Serialize)]
pub struct StoneReport {
    /// MV-lattice homs of the reduct are exactly the MV-algebra homs.
    pub homs_agree: bool,
    pub bijective: bool,
    pub continuous: bool,
    pub open: bool,
    pub trivial_order: bool,
    pub clop_up_is_clop: bool,
    /// `map[i]` is the maximal ideal `f_i⁻¹[0]`.
    pub map: Vec<usize>,
    pub maximal: Vec<Ideal>,
}

impl StoneReport {
    pub fn holds(&self) -> bool {
        self.homs_agree && self.bijective && self.continuous && self.open && self.trivial_order && self.clop_up_is_clop
    }
}

/// The maximal spectrum with the MV-topology generated by `{â : a ∈ B}`.
pub fn spectrum_space(b: &FinAlgebra, limits: Limits) -> Result<(MVTopology, Vec<Ideal>)> {
    let rep = belluce_embedding(b)?;
    let grid = rep
        .hats
        .iter()
        .flatten()
        .map(|v| v.denom().to_u64().expect("small denominator"))
        .fold(1u64, |acc, d| acc.lcm(&d));
    let family = rep
        .hats
        .iter()
        .map(|h| FuzzySubset::from_values(grid, h))
        .collect::<Result<Vec<_>>>()?;
    let names = (0..rep.maximal.len()).map(|i| format!("M{i}")).collect();
    let space = MVTopology::generate(names, grid, &family, Generation::Subbase, None, limits.opens)?;
    Ok((space, rep.maximal))
}

pub fn stone_compare(b: &FinAlgebra, limits: Limits) -> Result<StoneReport> {
    if b.signature() != Signature::Mv {
        return Err(Error::Signature("comparison needs an MV-algebra".into()));
    }
    if !is_semisimple(b)? {
        return Err(Error::NotSemisimple);
    }
    let mv_homs = enumerate_homs(b, None)?.homs;
    let dual = upsilon(b, limits)?;
    let homs_agree = dual.homs == mv_homs;
    let (max_space, maximal) = spectrum_space(b, limits)?;
    let map = dual
        .homs
        .iter()
        .map(|f| {
            let zeros = Ideal::new(f.zero_set());
            maximal
                .iter()
                .position(|m| *m == zeros)
                .ok_or_else(|| Error::Invariant("hom kernel is not a maximal ideal".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let clopens = dual.space.clopens();
    let increasing = dual.space.increasing_clopens()?;
    Ok(StoneReport {
        homs_agree,
        bijective: is_bijection(&map, maximal.len()),
        continuous: is_continuous(&map, &dual.space, &max_space),
        open: is_open_map(&map, &dual.space, &max_space),
        trivial_order: dual.space.order().expect("ordered").is_discrete(),
        clop_up_is_clop: clopens == increasing,
        map,
        maximal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn dual_of_the_l2x2_example() {
        let a = samples::l2x2_positive();
        let d = upsilon(&a, lim()).unwrap();
        assert_eq!(d.space.point_count(), 2);
        let order = d.space.order().unwrap();
        assert!(order.holds(0, 1) && !order.holds(1, 0));
        assert_eq!(d.clopen_algebra.algebra.len(), 9);
        assert_eq!(d.space.clopens().len(), 9);
        assert!(d.space.check_axioms().all());
        // the example is not H-complete, so (1/2,1/2) is increasing too
        let c = clop_up(&d.space).unwrap();
        assert_eq!(c.len(), 6);
        let tilde = d.tilde_algebra().unwrap();
        assert_eq!(tilde.len(), 5);
        let h = crate::order::is_h_complete(&tilde, &d.clopen_algebra.algebra, 64).unwrap();
        assert!(!h.complete);
        assert_eq!(h.certificate.unwrap(), c);
        let v = check_duality(&a, lim()).unwrap();
        assert!(v.lcc && !v.h_complete && !v.counit_iso && v.unit_order_homeo);
    }

    #[test]
    fn two_element_algebra_has_a_point() {
        let l1 = FinAlgebra::chain(1).unwrap().reduct();
        let d = upsilon(&l1, lim()).unwrap();
        assert_eq!(d.space.point_count(), 1);
        assert_eq!(d.space.opens().len(), 2);
    }

    #[test]
    fn dual_of_c_keeps_f3_apart() {
        let c = samples::l223_c();
        let d = upsilon(&c, lim()).unwrap();
        assert_eq!(d.space.point_count(), 3);
        let o = d.space.order().unwrap();
        let comparable = o.pairs().into_iter().filter(|(x, y)| x != y).count();
        assert_eq!(comparable, 1);
    }

    #[test]
    fn one_point_space_with_three_values() {
        let sub = [FuzzySubset::from_numerators(2, vec![1]).unwrap()];
        let x = MVTopology::generate(vec!["p".into()], 2, &sub, Generation::Subbase, Some(Relation::identity(1)), 64)
            .unwrap();
        let c = clop_up(&x).unwrap();
        assert_eq!(c, FinAlgebra::chain(2).unwrap().reduct());
    }

    #[test]
    fn triangles_on_examples() {
        let a = samples::l2x2_positive();
        let x = upsilon(&a, lim()).unwrap().space;
        assert!(check_triangles(&x, &a, lim()).unwrap().holds());
        let l1 = FinAlgebra::chain(1).unwrap();
        let p = upsilon(&l1, lim()).unwrap().space;
        assert!(check_triangles(&p, &l1, lim()).unwrap().holds());
    }

    #[test]
    fn morphisms() {
        let (a, b) = (samples::l223_a(), samples::l223_b());
        let (da, db) = (upsilon(&a, lim()).unwrap(), upsilon(&b, lim()).unwrap());
        let incl = AlgebraMap {
            images: crate::algebra::locate(&a, &b).unwrap(),
        };
        let map = upsilon_on_morphism(&incl, &a, &b, &da, &db).unwrap();
        assert!(is_bijection(&map, 3));
        let id = AlgebraMap::identity(a.len());
        assert_eq!(upsilon_on_morphism(&id, &a, &a, &da, &da).unwrap(), vec![0, 1, 2]);

        let x = da.space.clone();
        let ident: Vec<usize> = (0..x.point_count()).collect();
        assert_eq!(
            clop_up_on_morphism(&ident, &x, &x).unwrap(),
            AlgebraMap::identity(clop_up(&x).unwrap().len())
        );
    }

    #[test]
    fn verdicts_for_l223() {
        let vb = check_duality(&samples::l223_b(), lim()).unwrap();
        assert!(vb.passed(), "{vb:?}");
        let va = check_duality(&samples::l223_a(), lim()).unwrap();
        assert!(!va.h_complete && !va.counit_iso);
        assert!(va.certificates.enlargement.is_some());
        assert!(va.certificates.failed.contains(&"h_complete".to_string()));
        let full = FinAlgebra::full_product(&[2, 3]).unwrap();
        let vf = check_duality(&full, lim()).unwrap();
        assert!(vf.passed());
    }

    #[test]
    fn space_verdict() {
        let x = upsilon(&samples::l223_b(), lim()).unwrap().space;
        let v = check_duality_space(&x, lim()).unwrap();
        assert!(v.passed(), "{v:?}");
        assert_eq!(v.certificates.vacuous, vec!["lcc".to_string()]);
    }

    #[test]
    fn nonseparating_algebra_is_rejected() {
        assert!(check_duality(&samples::nonseparated_mvlat(), lim()).is_err());
    }

    #[test]
    fn stone_comparisons() {
        for chains in [vec![2, 2], vec![3], vec![2, 2, 3]] {
            let b = FinAlgebra::full_product(&chains).unwrap();
            let r = stone_compare(&b, lim()).unwrap();
            assert!(r.holds(), "{chains:?}: {r:?}");
            assert_eq!(r.map.len(), chains.len());
        }
    }

    #[test]
    fn full_l223_dual_is_discrete() {
        let e = FinAlgebra::full_product(&[2, 2, 3]).unwrap();
        let d = upsilon(&e, lim()).unwrap();
        assert_eq!(d.space.point_count(), 3);
        assert!(d.space.order().unwrap().is_discrete());
        let x = d.space.clone();
        assert_eq!(clop_up(&x).unwrap(), clop(&x).unwrap());
    }

    #[test]
    fn duals_are_order_homeomorphic_iff_compatible() {
        let e = FinAlgebra::full_product(&[2, 2, 3]).unwrap();
        let subs = [samples::l223_a(), samples::l223_b(), samples::l223_c()];
        let duals: Vec<_> = subs.iter().map(|s| upsilon(s, lim()).unwrap().space).collect();
        for i in 0..3 {
            for j in 0..3 {
                let homeo = find_order_homeomorphism(&duals[i], &duals[j], 8).unwrap().is_some();
                let compat = crate::order::are_compatible(&subs[i], &subs[j], &e).unwrap();
                assert_eq!(homeo, compat, "{i} {j}");
            }
        }
    }

    #[test]
    fn functoriality_on_inclusions() {
        // A ⊆ B ⊆ E as positive subreducts
        let e = FinAlgebra::full_product(&[2, 2, 3]).unwrap().reduct();
        let (a, b) = (samples::l223_a(), samples::l223_b());
        let q = AlgebraMap {
            images: crate::algebra::locate(&a, &b).unwrap(),
        };
        let r = AlgebraMap {
            images: crate::algebra::locate(&b, &e).unwrap(),
        };
        let (da, db, de) = (
            upsilon(&a, lim()).unwrap(),
            upsilon(&b, lim()).unwrap(),
            upsilon(&e, lim()).unwrap(),
        );
        let uq = upsilon_on_morphism(&q, &a, &b, &da, &db).unwrap();
        let ur = upsilon_on_morphism(&r, &b, &e, &db, &de).unwrap();
        let urq = upsilon_on_morphism(&q.then(&r), &a, &e, &da, &de).unwrap();
        let composed: Vec<usize> = ur.iter().map(|&p| uq[p]).collect();
        assert_eq!(urq, composed);

        let (x, y, z) = (&de.space, &db.space, &da.space);
        let cf = clop_up_on_morphism(&ur, x, y).unwrap();
        let cg = clop_up_on_morphism(&uq, y, z).unwrap();
        let cgf = clop_up_on_morphism(&composed, x, z).unwrap();
        assert_eq!(cgf, cg.then(&cf));
    }

    #[test]
    fn unit_preserves_and_reflects_order() {
        for a in [samples::l223_a(), samples::l223_c(), samples::l2x2_positive()] {
            let x = upsilon(&a, lim()).unwrap().space;
            let eta = unit(&x, lim()).unwrap();
            let (ox, oy) = (x.order().unwrap(), eta.dual.space.order().unwrap());
            assert!(is_order_embedding(&eta.images, ox, oy));
            assert!(is_bijection(&eta.images, eta.dual.space.point_count()));
        }
    }
}
