//! Worked example algebras and a small corpus of test algebras.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{FinAlgebra, Signature, TablesSpec};
use crate::UnitRational;

fn tuples(rows: &[&[&str]]) -> Vec<Vec<UnitRational>> {
    rows.iter()
        .map(|r| r.iter().map(|v| v.parse().expect("literal rational")).collect())
        .collect()
}

const L2X2_POSITIVE: &[&[&str]] = &[&["0", "0"], &["0", "1/2"], &["0", "1"], &["1/2", "1"], &["1", "1"]];

const L223_A: &[&[&str]] = &[
    &["0", "0", "0"],
    &["0", "1/2", "0"],
    &["0", "1", "0"],
    &["1/2", "1", "0"],
    &["1", "1", "0"],
    &["0", "1/2", "1/3"],
    &["0", "1", "1/3"],
    &["1/2", "1", "1/3"],
    &["1", "1", "1/3"],
    &["0", "1", "2/3"],
    &["1/2", "1", "2/3"],
    &["1", "1", "2/3"],
    &["0", "1", "1"],
    &["1/2", "1", "1"],
    &["1", "1", "1"],
];

const L223_B_EXTRA: &[&[&str]] = &[&["1/2", "1/2", "0"], &["1/2", "1/2", "1/3"]];

const L223_C_EXTRA: &[&[&str]] = &[
    &["0", "0", "1/3"],
    &["0", "0", "2/3"],
    &["1/2", "1/2", "2/3"],
    &["0", "1/2", "2/3"],
    &["0", "0", "1"],
    &["0", "1/2", "1"],
    &["1/2", "1/2", "1"],
];

/// Five-element positive subreduct of `Ł_2 × Ł_2` whose two homs are
/// comparable.
pub fn l2x2_positive() -> FinAlgebra {
    FinAlgebra::from_tuples(vec![2, 2], tuples(L2X2_POSITIVE), Signature::Mvlat).expect("closed subset")
}

/// 15-element positive subreduct of `Ł_2 × Ł_2 × Ł_3` that is not H-complete.
pub fn l223_a() -> FinAlgebra {
    FinAlgebra::from_tuples(vec![2, 2, 3], tuples(L223_A), Signature::Mvlat).expect("closed subset")
}

/// The 17-element H-complete extension of [`l223_a`].
pub fn l223_b() -> FinAlgebra {
    let mut t = tuples(L223_A);
    t.extend(tuples(L223_B_EXTRA));
    FinAlgebra::from_tuples(vec![2, 2, 3], t, Signature::Mvlat).expect("closed subset")
}

/// A 24-element positive subreduct compatible with neither [`l223_a`] nor
/// [`l223_b`].
pub fn l223_c() -> FinAlgebra {
    let mut t = tuples(L223_A);
    t.extend(tuples(L223_B_EXTRA));
    t.extend(tuples(L223_C_EXTRA));
    FinAlgebra::from_tuples(vec![2, 2, 3], t, Signature::Mvlat).expect("closed subset")
}

/// `Ł_2` given by tables over the names `0`, `h`, `1`.
pub fn l2_tables() -> FinAlgebra {
    let s = |rows: &[&[&str]]| -> Vec<Vec<String>> {
        rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()
    };
    FinAlgebra::from_tables(&TablesSpec {
        signature: Signature::Mv,
        elements: vec!["0".into(), "h".into(), "1".into()],
        zero: "0".into(),
        one: Some("1".into()),
        add: s(&[&["0", "h", "1"], &["h", "1", "1"], &["1", "1", "1"]]),
        neg: Some(vec!["1".into(), "h".into(), "0".into()]),
        mul: None,
        join: None,
        meet: None,
    })
    .expect("valid tables")
}

/// Three-element chain `0 < a < 1` with `a + a = a` and `a · a = 0`. It
/// satisfies the MV-lattice laws, but every homomorphism into `[0,1]` sends
/// `a` to 0.
pub fn nonseparated_mvlat() -> FinAlgebra {
    let s = |rows: &[&[&str]]| -> Vec<Vec<String>> {
        rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect()
    };
    FinAlgebra::from_tables(&TablesSpec {
        signature: Signature::Mvlat,
        elements: vec!["0".into(), "a".into(), "1".into()],
        zero: "0".into(),
        one: Some("1".into()),
        add: s(&[&["0", "a", "1"], &["a", "a", "1"], &["1", "1", "1"]]),
        neg: None,
        mul: Some(s(&[&["0", "0", "0"], &["0", "0", "a"], &["0", "a", "1"]])),
        join: Some(s(&[&["0", "a", "1"], &["a", "a", "1"], &["1", "1", "1"]])),
        meet: Some(s(&[&["0", "0", "0"], &["0", "a", "a"], &["0", "a", "1"]])),
    })
    .expect("valid tables")
}

/// Every product `Ł_{n_1} × … × Ł_{n_k}` with `1 ≤ n_1 ≤ … ≤ n_k ≤ max_n`
/// and `1 ≤ k ≤ max_factors`.
pub fn chain_products(max_n: u64, max_factors: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<u64>> = vec![Vec::new()];
    for _ in 0..max_factors {
        let mut next = Vec::new();
        for prefix in &frontier {
            let start = prefix.last().copied().unwrap_or(1);
            for n in start..=max_n {
                let mut p = prefix.clone();
                p.push(n);
                next.push(p);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Every subset of `ambient` containing 0 and 1 and closed under the
/// MV-lattice operations. Exponential in `|ambient|`.
pub fn positive_subreducts(ambient: &FinAlgebra) -> Vec<FinAlgebra> {
    let inner: Vec<usize> = (0..ambient.len())
        .filter(|&i| i != ambient.zero() && i != ambient.one())
        .collect();
    assert!(inner.len() < 20, "carrier too large for exhaustive subsets");
    let mut out = Vec::new();
    for mask in 0u32..(1 << inner.len()) {
        let mut members = vec![ambient.zero(), ambient.one()];
        members.extend(inner.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &i)| i));
        if ambient.is_closed(&members, Signature::Mvlat) {
            out.push(ambient.restrict(&members, Signature::Mvlat).expect("closed subset"));
        }
    }
    out
}

/// Positive subreducts of `ambient` generated by random seeds, distinct by
/// carrier. Deterministic for a given `seed`.
pub fn sampled_subreducts(ambient: &FinAlgebra, count: usize, seed: u64) -> Vec<FinAlgebra> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inner: Vec<usize> = (0..ambient.len())
        .filter(|&i| i != ambient.zero() && i != ambient.one())
        .collect();
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < count && attempts < count * 200 {
        attempts += 1;
        let k = rng.gen_range(1..=3.min(inner.len()));
        let picks: Vec<usize> = inner.choose_multiple(&mut rng, k).copied().collect();
        let members = ambient.close(&picks, Signature::Mvlat);
        if seen.insert(members.clone()) {
            out.push(ambient.restrict(&members, Signature::Mvlat).expect("closed subset"));
        }
    }
    out
}

/// Random pairs `x < y` in `[0,1]` with denominators at most `max_denom`.
/// Deterministic for a given `seed`.
pub fn separator_pairs(count: usize, max_denom: u64, seed: u64) -> Vec<(UnitRational, UnitRational)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| {
        let d = rng.gen_range(1..=max_denom.max(1));
        let n = rng.gen_range(0..=d);
        UnitRational::from_grid(n, d)
    };
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let (x, y) = (draw(&mut rng), draw(&mut rng));
        match x.cmp(&y) {
            std::cmp::Ordering::Less => out.push((x, y)),
            std::cmp::Ordering::Greater => out.push((y, x)),
            std::cmp::Ordering::Equal => {}
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worked_examples_have_expected_sizes() {
        assert_eq!(l2x2_positive().len(), 5);
        assert_eq!(l223_a().len(), 15);
        assert_eq!(l223_b().len(), 17);
        assert_eq!(l223_c().len(), 24);
    }

    #[test]
    fn product_list() {
        let p = chain_products(4, 3);
        assert_eq!(p.len(), 4 + 10 + 20);
        assert!(p.contains(&vec![2, 2, 3]));
    }

    #[test]
    fn l2x2_subreducts_include_the_example() {
        let p = FinAlgebra::full_product(&[2, 2]).unwrap();
        let subs = positive_subreducts(&p);
        assert!(subs.contains(&l2x2_positive()));
        assert!(subs.iter().any(|s| s.len() == 9));
        assert!(subs.iter().any(|s| s.len() == 2));
    }

    #[test]
    fn sampling_is_deterministic() {
        let e = FinAlgebra::full_product(&[2, 2, 3]).unwrap();
        let a = sampled_subreducts(&e, 20, 7);
        let b = sampled_subreducts(&e, 20, 7);
        assert_eq!(a.len(), 20);
        assert_eq!(a, b);
    }

    #[test]
    fn separator_pairs_are_ordered_and_reproducible() {
        let p = separator_pairs(200, 20, 7);
        assert_eq!(p.len(), 200);
        assert!(p.iter().all(|(x, y)| x < y && *x.denom() <= 20u32.into() && *y.denom() <= 20u32.into()));
        assert_eq!(p, separator_pairs(200, 20, 7));
    }
}
