//! Finite MV-algebras and MV-lattices.
//!
//! An algebra is either a set of tuples inside a product of Łukasiewicz
//! chains `Ł_{n_1} × … × Ł_{n_k}` or an abstract carrier with explicit
//! operation tables. Either way, every operation is precomputed into an
//! `n × n` table over the canonical element order, so downstream code works
//! on element indices.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::term::{record_witnesses, GenWitness, Interpretation, Term};
use crate::UnitRational;

/// Which operations an algebra declares.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Signature {
    /// `(⊕, *, 0)`; `⊙`, `∨`, `∧` and `1` are derived.
    Mv,
    /// `(+, ·, ∨, ∧, 0, 1)`, no negation.
    Mvlat,
}

impl Signature {
    pub fn binary_ops(self) -> &'static [Op] {
        match self {
            Signature::Mv => &[Op::Add],
            Signature::Mvlat => &[Op::Add, Op::Mul, Op::Join, Op::Meet],
        }
    }

    pub fn has_neg(self) -> bool {
        self == Signature::Mv
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Signature::Mv => "mv",
            Signature::Mvlat => "mvlat",
        })
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Op {
    Add,
    Mul,
    Join,
    Meet,
    Neg,
}

impl Op {
    pub fn name(self) -> &'static str {
        match self {
            Op::Add => "add",
            Op::Mul => "mul",
            Op::Join => "join",
            Op::Meet => "meet",
            Op::Neg => "neg",
        }
    }

    fn on_grid(self, a: u64, b: u64, n: u64) -> u64 {
        match self {
            Op::Add => (a + b).min(n),
            Op::Mul => (a + b).saturating_sub(n),
            Op::Join => a.max(b),
            Op::Meet => a.min(b),
            Op::Neg => n - a,
        }
    }
}

/// How an element entered a generated algebra. Operands are element indices
/// of the generated algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Derivation {
    Generator(usize),
    Zero,
    One,
    Unary(Op, usize),
    Binary(Op, usize, usize),
}

/// Record of a staged closure: per element its first derivation and stage,
/// plus the order in which elements were discovered.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ClosureTrace {
    pub derivations: Vec<Derivation>,
    pub stages: Vec<usize>,
    pub discovery: Vec<usize>,
}

/// A carrier element: a tuple of chain values or a named abstract element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Tuple(Vec<UnitRational>),
    Named(String),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Named(name) => f.write_str(name),
            Element::Tuple(values) => {
                f.write_str("(")?;
                for (i, v) in values.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{v}")?;
                }
                f.write_str(")")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Representation {
    Tuples { chains: Vec<u64> },
    Tables,
}

/// A finite MV-algebra or MV-lattice with precomputed operation tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinAlgebra {
    signature: Signature,
    repr: Representation,
    elements: Vec<Element>,
    index: HashMap<Element, usize>,
    zero: usize,
    one: usize,
    add: Vec<usize>,
    mul: Vec<usize>,
    join: Vec<usize>,
    meet: Vec<usize>,
    neg: Option<Vec<usize>>,
}

fn grid_coords(values: &[UnitRational], chains: &[u64]) -> Result<Vec<u64>> {
    if values.len() != chains.len() {
        return Err(Error::InvalidAlgebra(format!(
            "tuple has {} coordinates, ambient has {}",
            values.len(),
            chains.len()
        )));
    }
    values
        .iter()
        .zip(chains)
        .map(|(v, &n)| {
            v.on_grid(n).ok_or_else(|| Error::OffGrid {
                value: v.to_string(),
                grid: n,
            })
        })
        .collect()
}

fn coords_to_tuple(coords: &[u64], chains: &[u64]) -> Vec<UnitRational> {
    coords.iter().zip(chains).map(|(&k, &n)| UnitRational::from_grid(k, n)).collect()
}

fn apply_coords(op: Op, a: &[u64], b: &[u64], chains: &[u64]) -> Vec<u64> {
    a.iter()
        .zip(b)
        .zip(chains)
        .map(|((&x, &y), &n)| op.on_grid(x, y, n))
        .collect()
}

/// All tuples of `Ł_{n_1} × … × Ł_{n_k}` in lexicographic order.
fn all_grid_tuples(chains: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for &n in chains {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=n).map(move |k| {
                    let mut t = prefix.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }
    out
}

impl FinAlgebra {
    /// `Ł_n = {0, 1/n, …, 1}` as an MV-algebra.
    pub fn chain(n: u64) -> Result<FinAlgebra> {
        if n == 0 {
            return Err(Error::InvalidAlgebra("chain order must be at least 1".into()));
        }
        FinAlgebra::full_product(&[n])
    }

    /// The full product `Ł_{n_1} × … × Ł_{n_k}` as an MV-algebra.
    pub fn full_product(chains: &[u64]) -> Result<FinAlgebra> {
        if chains.contains(&0) {
            return Err(Error::InvalidAlgebra("chain order must be at least 1".into()));
        }
        Self::from_coords(chains.to_vec(), all_grid_tuples(chains), Signature::Mv)
    }

    /// A subset of a product of chains, checked for closure under `signature`.
    pub fn from_tuples(
        chains: Vec<u64>,
        elements: Vec<Vec<UnitRational>>,
        signature: Signature,
    ) -> Result<FinAlgebra> {
        if chains.contains(&0) {
            return Err(Error::InvalidAlgebra("chain order must be at least 1".into()));
        }
        let coords = elements
            .iter()
            .map(|t| grid_coords(t, &chains))
            .collect::<Result<Vec<_>>>()?;
        Self::from_coords(chains, coords, signature)
    }

    fn from_coords(chains: Vec<u64>, mut coords: Vec<Vec<u64>>, signature: Signature) -> Result<FinAlgebra> {
        coords.sort();
        coords.dedup();
        let lookup: HashMap<&[u64], usize> = coords.iter().enumerate().map(|(i, c)| (c.as_slice(), i)).collect();
        let zero_t = vec![0; chains.len()];
        let one_t = chains.clone();
        let zero = *lookup
            .get(zero_t.as_slice())
            .ok_or_else(|| Error::InvalidAlgebra("carrier lacks the bottom element".into()))?;
        let one = *lookup
            .get(one_t.as_slice())
            .ok_or_else(|| Error::InvalidAlgebra("carrier lacks the top element".into()))?;
        let n = coords.len();
        let table = |op: Op, required: bool| -> Result<Option<Vec<usize>>> {
            let mut t = Vec::with_capacity(n * n);
            for a in &coords {
                for b in &coords {
                    let r = apply_coords(op, a, b, &chains);
                    match lookup.get(r.as_slice()) {
                        Some(&i) => t.push(i),
                        None if required => {
                            return Err(Error::InvalidAlgebra(format!(
                                "carrier is not closed under {}: {} {} {} = {} is missing",
                                op.name(),
                                Element::Tuple(coords_to_tuple(a, &chains)),
                                op.name(),
                                Element::Tuple(coords_to_tuple(b, &chains)),
                                Element::Tuple(coords_to_tuple(&r, &chains)),
                            )))
                        }
                        None => return Ok(None),
                    }
                }
            }
            Ok(Some(t))
        };
        let neg = if signature.has_neg() {
            let mut t = Vec::with_capacity(n);
            for a in &coords {
                let r = apply_coords(Op::Neg, a, a, &chains);
                let i = lookup.get(r.as_slice()).ok_or_else(|| {
                    Error::InvalidAlgebra(format!(
                        "carrier is not closed under neg: {} is missing",
                        Element::Tuple(coords_to_tuple(&r, &chains))
                    ))
                })?;
                t.push(*i);
            }
            Some(t)
        } else {
            None
        };
        let add = table(Op::Add, true)?.expect("required table");
        let mul = table(Op::Mul, true)?.expect("required table");
        let join = table(Op::Join, true)?.expect("required table");
        let meet = table(Op::Meet, true)?.expect("required table");
        let elements: Vec<Element> = coords
            .iter()
            .map(|c| Element::Tuple(coords_to_tuple(c, &chains)))
            .collect();
        Ok(Self::assemble(
            signature,
            Representation::Tuples { chains },
            elements,
            zero,
            one,
            [add, mul, join, meet],
            neg,
        ))
    }

    fn assemble(
        signature: Signature,
        repr: Representation,
        elements: Vec<Element>,
        zero: usize,
        one: usize,
        [add, mul, join, meet]: [Vec<usize>; 4],
        neg: Option<Vec<usize>>,
    ) -> FinAlgebra {
        let index = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        FinAlgebra {
            signature,
            repr,
            elements,
            index,
            zero,
            one,
            add,
            mul,
            join,
            meet,
            neg,
        }
    }

    /// Product of algebras with a common signature, computed coordinatewise.
    pub fn product(factors: &[FinAlgebra]) -> Result<FinAlgebra> {
        let signature = factors.first().map_or(Signature::Mv, |f| f.signature);
        if factors.iter().any(|f| f.signature != signature) {
            return Err(Error::Signature("product factors must share a signature".into()));
        }
        if factors
            .iter()
            .all(|f| matches!(f.repr, Representation::Tuples { .. }))
        {
            let chains: Vec<u64> = factors.iter().flat_map(|f| f.chains().to_vec()).collect();
            let mut tuples: Vec<Vec<UnitRational>> = vec![Vec::new()];
            for f in factors {
                tuples = tuples
                    .into_iter()
                    .flat_map(|prefix| {
                        f.elements.iter().map(move |e| {
                            let mut t = prefix.clone();
                            if let Element::Tuple(v) = e {
                                t.extend(v.iter().cloned());
                            }
                            t
                        })
                    })
                    .collect();
            }
            return FinAlgebra::from_tuples(chains, tuples, signature);
        }
        // Mixed-radix index arithmetic over the factors' tables.
        let sizes: Vec<usize> = factors.iter().map(FinAlgebra::len).collect();
        let total: usize = sizes.iter().product();
        let split = |mut i: usize| -> Vec<usize> {
            let mut parts = vec![0; sizes.len()];
            for (k, &s) in sizes.iter().enumerate().rev() {
                parts[k] = i % s;
                i /= s;
            }
            parts
        };
        let fuse = |parts: &[usize]| parts.iter().zip(&sizes).fold(0, |acc, (&p, &s)| acc * s + p);
        let elements: Vec<Element> = (0..total)
            .map(|i| {
                let names: Vec<String> = split(i)
                    .iter()
                    .zip(factors)
                    .map(|(&p, f)| f.elements[p].to_string())
                    .collect();
                Element::Named(format!("({})", names.join(",")))
            })
            .collect();
        let binary = |pick: fn(&FinAlgebra, usize, usize) -> usize| -> Vec<usize> {
            let mut t = Vec::with_capacity(total * total);
            for a in 0..total {
                let pa = split(a);
                for b in 0..total {
                    let pb = split(b);
                    let parts: Vec<usize> = factors
                        .iter()
                        .enumerate()
                        .map(|(k, f)| pick(f, pa[k], pb[k]))
                        .collect();
                    t.push(fuse(&parts));
                }
            }
            t
        };
        let add = binary(|f, a, b| f.add(a, b));
        let mul = binary(|f, a, b| f.mul(a, b));
        let join = binary(|f, a, b| f.join(a, b));
        let meet = binary(|f, a, b| f.meet(a, b));
        let neg = if signature.has_neg() {
            Some(
                (0..total)
                    .map(|a| {
                        let parts: Vec<usize> = split(a)
                            .iter()
                            .zip(factors)
                            .map(|(&p, f)| f.neg(p).expect("mv factor has negation"))
                            .collect();
                        fuse(&parts)
                    })
                    .collect(),
            )
        } else {
            None
        };
        let zero = fuse(&factors.iter().map(|f| f.zero).collect::<Vec<_>>());
        let one = fuse(&factors.iter().map(|f| f.one).collect::<Vec<_>>());
        Ok(Self::assemble(
            signature,
            Representation::Tables,
            elements,
            zero,
            one,
            [add, mul, join, meet],
            neg,
        ))
    }

    /// An abstract algebra given by operation tables.
    pub fn from_tables(spec: &TablesSpec) -> Result<FinAlgebra> {
        let n = spec.elements.len();
        if n == 0 {
            return Err(Error::schema("elements", "carrier must not be empty"));
        }
        let names: HashMap<&str, usize> = spec
            .elements
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_str(), i))
            .collect();
        if names.len() != n {
            return Err(Error::schema("elements", "element names must be distinct"));
        }
        let id = |path: &str, name: &str| -> Result<usize> {
            names
                .get(name)
                .copied()
                .ok_or_else(|| Error::schema(path, format!("unknown element `{name}`")))
        };
        let square = |field: &str, rows: &Option<Vec<Vec<String>>>| -> Result<Vec<usize>> {
            let rows = rows
                .as_ref()
                .ok_or_else(|| Error::schema(field, "table is required for this signature"))?;
            if rows.len() != n {
                return Err(Error::schema(field, format!("expected {n} rows, found {}", rows.len())));
            }
            let mut t = Vec::with_capacity(n * n);
            for (i, row) in rows.iter().enumerate() {
                if row.len() != n {
                    return Err(Error::schema(
                        format!("{field}[{i}]"),
                        format!("expected {n} entries, found {}", row.len()),
                    ));
                }
                for (j, name) in row.iter().enumerate() {
                    t.push(id(&format!("{field}[{i}][{j}]"), name)?);
                }
            }
            Ok(t)
        };
        let zero = id("zero", &spec.zero)?;
        let add = square("add", &Some(spec.add.clone()))?;
        let elements: Vec<Element> = spec.elements.iter().cloned().map(Element::Named).collect();
        match spec.signature {
            Signature::Mv => {
                let neg_names = spec
                    .neg
                    .as_ref()
                    .ok_or_else(|| Error::schema("neg", "table is required for the mv signature"))?;
                if neg_names.len() != n {
                    return Err(Error::schema("neg", format!("expected {n} entries")));
                }
                let neg = neg_names
                    .iter()
                    .enumerate()
                    .map(|(i, s)| id(&format!("neg[{i}]"), s))
                    .collect::<Result<Vec<_>>>()?;
                let one = neg[zero];
                if let Some(given) = &spec.one {
                    if id("one", given)? != one {
                        return Err(Error::schema("one", "top must equal the negation of zero"));
                    }
                }
                let at = |t: &Vec<usize>, a: usize, b: usize| t[a * n + b];
                let mul: Vec<usize> = (0..n * n)
                    .map(|k| neg[at(&add, neg[k / n], neg[k % n])])
                    .collect();
                let join: Vec<usize> = (0..n * n)
                    .map(|k| {
                        let (a, b) = (k / n, k % n);
                        at(&add, at(&mul, a, neg[b]), b)
                    })
                    .collect();
                let meet: Vec<usize> = (0..n * n)
                    .map(|k| neg[at(&join, neg[k / n], neg[k % n])])
                    .collect();
                Ok(Self::assemble(
                    Signature::Mv,
                    Representation::Tables,
                    elements,
                    zero,
                    one,
                    [add, mul, join, meet],
                    Some(neg),
                ))
            }
            Signature::Mvlat => {
                let one_name = spec
                    .one
                    .as_ref()
                    .ok_or_else(|| Error::schema("one", "required for the mvlat signature"))?;
                let one = id("one", one_name)?;
                let mul = square("mul", &spec.mul)?;
                let join = square("join", &spec.join)?;
                let meet = square("meet", &spec.meet)?;
                Ok(Self::assemble(
                    Signature::Mvlat,
                    Representation::Tables,
                    elements,
                    zero,
                    one,
                    [add, mul, join, meet],
                    None,
                ))
            }
        }
    }

    /// The sub-carrier `members`, which must contain 0 and 1 and be closed
    /// under `signature`.
    pub fn restrict(&self, members: &[usize], signature: Signature) -> Result<FinAlgebra> {
        if signature.has_neg() && self.neg.is_none() {
            return Err(Error::Signature("cannot restrict an MV-lattice to the mv signature".into()));
        }
        let mut members = members.to_vec();
        members.sort_unstable();
        members.dedup();
        if members.iter().any(|&m| m >= self.len()) {
            return Err(Error::InvalidAlgebra("member index out of range".into()));
        }
        let mut pos = vec![usize::MAX; self.len()];
        for (i, &m) in members.iter().enumerate() {
            pos[m] = i;
        }
        let inside = |e: usize| pos[e] != usize::MAX;
        if !inside(self.zero) || !inside(self.one) {
            return Err(Error::InvalidAlgebra("sub-carrier must contain 0 and 1".into()));
        }
        let k = members.len();
        let remap = |op: Op, required: bool| -> Result<Option<Vec<usize>>> {
            let mut t = Vec::with_capacity(k * k);
            for &a in &members {
                for &b in &members {
                    let r = self.apply(op, a, b);
                    if !inside(r) {
                        if required {
                            return Err(Error::InvalidAlgebra(format!(
                                "sub-carrier is not closed under {}: {} {} {} = {}",
                                op.name(),
                                self.elements[a],
                                op.name(),
                                self.elements[b],
                                self.elements[r]
                            )));
                        }
                        return Ok(None);
                    }
                    t.push(pos[r]);
                }
            }
            Ok(Some(t))
        };
        let declared = signature.binary_ops();
        let mut tables = Vec::with_capacity(4);
        for op in [Op::Add, Op::Mul, Op::Join, Op::Meet] {
            let t = remap(op, declared.contains(&op) || signature.has_neg())?;
            tables.push(t.expect("required table"));
        }
        let neg = if signature.has_neg() {
            let neg = self.neg.as_ref().expect("checked above");
            let mut t = Vec::with_capacity(k);
            for &a in &members {
                if !inside(neg[a]) {
                    return Err(Error::InvalidAlgebra(format!(
                        "sub-carrier is not closed under neg: {}* = {}",
                        self.elements[a], self.elements[neg[a]]
                    )));
                }
                t.push(pos[neg[a]]);
            }
            Some(t)
        } else {
            None
        };
        let [add, mul, join, meet]: [Vec<usize>; 4] = tables.try_into().expect("four tables");
        Ok(Self::assemble(
            signature,
            self.repr.clone(),
            members.iter().map(|&m| self.elements[m].clone()).collect(),
            pos[self.zero],
            pos[self.one],
            [add, mul, join, meet],
            neg,
        ))
    }

    /// The MV-lattice reduct `(⊕, ⊙, ∨, ∧, 0, 1)`.
    pub fn reduct(&self) -> FinAlgebra {
        let mut r = self.clone();
        r.signature = Signature::Mvlat;
        r.neg = None;
        r
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn representation(&self) -> &Representation {
        &self.repr
    }

    /// Chain orders of the ambient product, empty for table algebras.
    pub fn chains(&self) -> &[u64] {
        match &self.repr {
            Representation::Tuples { chains } => chains,
            Representation::Tables => &[],
        }
    }

    pub fn is_tuples(&self) -> bool {
        matches!(self.repr, Representation::Tuples { .. })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// One-element algebra (0 = 1).
    pub fn is_trivial(&self) -> bool {
        self.zero == self.one
    }

    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Element {
        &self.elements[i]
    }

    pub fn index_of(&self, e: &Element) -> Option<usize> {
        self.index.get(e).copied()
    }

    /// Coordinates of a tuple element.
    pub fn tuple(&self, i: usize) -> Option<&[UnitRational]> {
        match &self.elements[i] {
            Element::Tuple(v) => Some(v),
            Element::Named(_) => None,
        }
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.len() + b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.len() + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.len() + b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.len() + b]
    }

    pub fn neg(&self, a: usize) -> Option<usize> {
        self.neg.as_ref().map(|t| t[a])
    }

    /// `a ⊖ b = a ⊙ b*`, mv signature only.
    pub fn sub(&self, a: usize, b: usize) -> Option<usize> {
        self.neg(b).map(|nb| self.mul(a, nb))
    }

    /// Chang distance `(a ⊖ b) ⊕ (b ⊖ a)`.
    pub fn dist(&self, a: usize, b: usize) -> Option<usize> {
        Some(self.add(self.sub(a, b)?, self.sub(b, a)?))
    }

    pub fn apply(&self, op: Op, a: usize, b: usize) -> usize {
        match op {
            Op::Add => self.add(a, b),
            Op::Mul => self.mul(a, b),
            Op::Join => self.join(a, b),
            Op::Meet => self.meet(a, b),
            Op::Neg => self.neg(a).expect("negation requires the mv signature"),
        }
    }

    /// Lattice order: `a ≤ b` iff `a ∨ b = b`.
    pub fn le(&self, a: usize, b: usize) -> bool {
        self.join(a, b) == b
    }

    /// Elements sorted so that every element comes after all elements below it.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.len();
        let below: Vec<usize> = (0..n).map(|a| (0..n).filter(|&b| self.le(b, a)).count()).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&a| (below[a], a));
        order
    }

    /// Evaluate a term on carrier elements.
    pub fn eval_term(&self, term: &Term, args: &[usize]) -> Result<usize> {
        term.interpret(self, args)
    }

    /// Whether `members` (containing 0 and 1) is closed under `signature`.
    pub fn is_closed(&self, members: &[usize], signature: Signature) -> bool {
        let mut inside = vec![false; self.len()];
        for &m in members {
            inside[m] = true;
        }
        if !inside[self.zero] || !inside[self.one] {
            return false;
        }
        if signature.has_neg() && members.iter().any(|&m| self.neg(m).map_or(true, |x| !inside[x])) {
            return false;
        }
        signature.binary_ops().iter().all(|&op| {
            members
                .iter()
                .all(|&a| members.iter().all(|&b| inside[self.apply(op, a, b)]))
        })
    }

    /// Smallest superset of `seed ∪ {0,1}` closed under `signature`, as a
    /// sorted index list. Fast path without a trace.
    pub fn close(&self, seed: &[usize], signature: Signature) -> Vec<usize> {
        let mut inside = vec![false; self.len()];
        let mut members = Vec::new();
        for &s in seed.iter().chain([self.zero, self.one].iter()) {
            if !inside[s] {
                inside[s] = true;
                members.push(s);
            }
        }
        let mut frontier = 0;
        while frontier < members.len() {
            let a = members[frontier];
            frontier += 1;
            let mut found = Vec::new();
            if signature.has_neg() {
                found.push(self.neg(a).expect("mv signature"));
            }
            for i in 0..frontier {
                let b = members[i];
                for &op in signature.binary_ops() {
                    found.push(self.apply(op, a, b));
                }
            }
            for r in found {
                if !inside[r] {
                    inside[r] = true;
                    members.push(r);
                }
            }
        }
        members.sort_unstable();
        members
    }

    /// Machine-readable form of this algebra.
    pub fn to_spec(&self) -> AlgebraSpec {
        match &self.repr {
            Representation::Tuples { chains } => {
                let full: usize = chains.iter().map(|&n| n as usize + 1).product();
                if full == self.len() && (self.signature == Signature::Mv || !chains.is_empty()) {
                    AlgebraSpec::Product {
                        chains: chains.clone(),
                        signature: Some(self.signature),
                    }
                } else {
                    AlgebraSpec::Subset {
                        chains: chains.clone(),
                        elements: (0..self.len())
                            .map(|i| self.tuple(i).expect("tuple algebra").to_vec())
                            .collect(),
                        signature: self.signature,
                    }
                }
            }
            Representation::Tables => {
                let name = |i: usize| self.elements[i].to_string();
                let square = |t: &Vec<usize>| -> Vec<Vec<String>> {
                    (0..self.len())
                        .map(|a| (0..self.len()).map(|b| name(t[a * self.len() + b])).collect())
                        .collect()
                };
                let mv = self.signature == Signature::Mv;
                AlgebraSpec::Tables(TablesSpec {
                    signature: self.signature,
                    elements: (0..self.len()).map(name).collect(),
                    zero: name(self.zero),
                    one: Some(name(self.one)),
                    add: square(&self.add),
                    neg: self.neg.as_ref().map(|t| t.iter().map(|&i| name(i)).collect()),
                    mul: (!mv).then(|| square(&self.mul)),
                    join: (!mv).then(|| square(&self.join)),
                    meet: (!mv).then(|| square(&self.meet)),
                })
            }
        }
    }

    pub fn from_spec(spec: &AlgebraSpec) -> Result<FinAlgebra> {
        match spec {
            AlgebraSpec::Product { chains, signature } => {
                let full = FinAlgebra::full_product(chains)?;
                Ok(match signature.unwrap_or(Signature::Mv) {
                    Signature::Mv => full,
                    Signature::Mvlat => full.reduct(),
                })
            }
            AlgebraSpec::Subset {
                chains,
                elements,
                signature,
            } => FinAlgebra::from_tuples(chains.clone(), elements.clone(), *signature),
            AlgebraSpec::Tables(t) => FinAlgebra::from_tables(t),
        }
    }

    pub fn from_json(text: &str) -> Result<FinAlgebra> {
        FinAlgebra::from_spec(&AlgebraSpec::parse(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_spec()).expect("algebra spec serializes")
    }
}

impl Interpretation for FinAlgebra {
    type Value = usize;

    fn zero(&self) -> usize {
        self.zero
    }
    fn one(&self) -> usize {
        self.one
    }
    fn add(&self, a: &usize, b: &usize) -> usize {
        FinAlgebra::add(self, *a, *b)
    }
    fn mul(&self, a: &usize, b: &usize) -> usize {
        FinAlgebra::mul(self, *a, *b)
    }
    fn join(&self, a: &usize, b: &usize) -> usize {
        FinAlgebra::join(self, *a, *b)
    }
    fn meet(&self, a: &usize, b: &usize) -> usize {
        FinAlgebra::meet(self, *a, *b)
    }
    fn neg(&self, a: &usize) -> Result<usize> {
        FinAlgebra::neg(self, *a).ok_or(Error::UnsupportedOperation("neg"))
    }
}

/// JSON description of an algebra.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum AlgebraSpec {
    Product {
        chains: Vec<u64>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        signature: Option<Signature>,
    },
    Subset {
        chains: Vec<u64>,
        elements: Vec<Vec<UnitRational>>,
        signature: Signature,
    },
    Tables(TablesSpec),
}

impl AlgebraSpec {
    /// Parse JSON text. Type errors are reported with line and column.
    pub fn parse(text: &str) -> Result<AlgebraSpec> {
        let value: serde_json::Value = serde_json::from_str(text)?;
        let kind = value
            .get("kind")
            .and_then(|k| k.as_str())
            .ok_or_else(|| Error::schema("kind", "expected one of `product`, `subset`, `tables`"))?;
        // Deserialize again from the text itself so positions survive.
        Ok(match kind {
            "product" => {
                let d: ProductDoc = serde_json::from_str(text)?;
                AlgebraSpec::Product {
                    chains: d.chains,
                    signature: d.signature,
                }
            }
            "subset" => {
                let d: SubsetDoc = serde_json::from_str(text)?;
                AlgebraSpec::Subset {
                    chains: d.chains,
                    elements: d.elements,
                    signature: d.signature,
                }
            }
            "tables" => {
                let d: TablesDoc = serde_json::from_str(text)?;
                AlgebraSpec::Tables(d.tables)
            }
            other => return Err(Error::schema("kind", format!("unknown kind `{other}`"))),
        })
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ProductDoc {
    #[allow(dead_code)]
    kind: String,
    chains: Vec<u64>,
    #[serde(default)]
    signature: Option<Signature>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct SubsetDoc {
    #[allow(dead_code)]
    kind: String,
    chains: Vec<u64>,
    elements: Vec<Vec<UnitRational>>,
    signature: Signature,
}

#[derive(Deserialize)]
struct TablesDoc {
    #[allow(dead_code)]
    kind: String,
    #[serde(flatten)]
    tables: TablesSpec,
}

/// Operation tables, with entries given by element name.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TablesSpec {
    pub signature: Signature,
    pub elements: Vec<String>,
    pub zero: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub one: Option<String>,
    pub add: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub neg: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mul: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub join: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meet: Option<Vec<Vec<String>>>,
}

/// Indices of `sub`'s elements inside `ambient`, matched by element value.
pub fn locate(sub: &FinAlgebra, ambient: &FinAlgebra) -> Result<Vec<usize>> {
    sub.elements
        .iter()
        .map(|e| ambient.index_of(e).ok_or_else(|| Error::NotInAmbient(e.to_string())))
        .collect()
}

// ---------------------------------------------------------------------------
// Axiom checking

/// One failing instance of a law.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomFailure {
    pub law: &'static str,
    pub args: Vec<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct AxiomReport {
    pub signature: Option<Signature>,
    pub instances_checked: usize,
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failed_laws(&self) -> Vec<&'static str> {
        let mut laws: Vec<&'static str> = self.failures.iter().map(|f| f.law).collect();
        laws.dedup();
        laws
    }
}

/// Exhaustively check the axioms of the algebra's declared signature.
pub fn check_axioms(a: &FinAlgebra) -> AxiomReport {
    let n = a.len();
    let mut report = AxiomReport {
        signature: Some(a.signature),
        ..Default::default()
    };
    let name = |i: usize| a.elements[i].to_string();
    let law = |report: &mut AxiomReport, law: &'static str, ok: bool, args: &[usize]| {
        report.instances_checked += 1;
        if !ok {
            report.failures.push(AxiomFailure {
                law,
                args: args.iter().map(|&i| name(i)).collect(),
            });
        }
    };
    let (z, o) = (a.zero, a.one);
    match a.signature {
        Signature::Mv => {
            let neg = |x: usize| a.neg(x).expect("mv signature");
            for x in 0..n {
                law(&mut report, "MV1 identity", a.add(x, z) == x, &[x]);
                law(&mut report, "MV2 involution", neg(neg(x)) == x, &[x]);
                law(&mut report, "MV3 absorbing top", a.add(neg(z), x) == neg(z), &[x]);
                for y in 0..n {
                    law(&mut report, "MV1 commutativity", a.add(x, y) == a.add(y, x), &[x, y]);
                    law(
                        &mut report,
                        "MV4",
                        a.add(neg(a.add(neg(x), y)), y) == a.add(neg(a.add(neg(y), x)), x),
                        &[x, y],
                    );
                    for w in 0..n {
                        law(
                            &mut report,
                            "MV1 associativity",
                            a.add(a.add(x, y), w) == a.add(x, a.add(y, w)),
                            &[x, y, w],
                        );
                    }
                }
            }
        }
        Signature::Mvlat => {
            for x in 0..n {
                law(&mut report, "lattice bottom", a.join(x, z) == x, &[x]);
                law(&mut report, "lattice top", a.meet(x, o) == x, &[x]);
                law(&mut report, "MVL1 x·1 = x", a.mul(x, o) == x, &[x]);
                law(&mut report, "MVL2 x+0 = x", a.add(x, z) == x, &[x]);
                for y in 0..n {
                    law(&mut report, "join commutativity", a.join(x, y) == a.join(y, x), &[x, y]);
                    law(&mut report, "meet commutativity", a.meet(x, y) == a.meet(y, x), &[x, y]);
                    law(&mut report, "absorption", a.join(x, a.meet(x, y)) == x, &[x, y]);
                    law(&mut report, "absorption dual", a.meet(x, a.join(x, y)) == x, &[x, y]);
                    law(&mut report, "sum commutativity", a.add(x, y) == a.add(y, x), &[x, y]);
                    law(&mut report, "product commutativity", a.mul(x, y) == a.mul(y, x), &[x, y]);
                    law(
                        &mut report,
                        "MVL3 (x·y)∨(x∧y) = x∧y",
                        a.join(a.mul(x, y), a.meet(x, y)) == a.meet(x, y),
                        &[x, y],
                    );
                    law(
                        &mut report,
                        "MVL4 (x+y)∨(x∨y) = x+y",
                        a.join(a.add(x, y), a.join(x, y)) == a.add(x, y),
                        &[x, y],
                    );
                    for w in 0..n {
                        let args = [x, y, w];
                        law(
                            &mut report,
                            "join associativity",
                            a.join(a.join(x, y), w) == a.join(x, a.join(y, w)),
                            &args,
                        );
                        law(
                            &mut report,
                            "meet associativity",
                            a.meet(a.meet(x, y), w) == a.meet(x, a.meet(y, w)),
                            &args,
                        );
                        law(
                            &mut report,
                            "lattice distributivity",
                            a.meet(x, a.join(y, w)) == a.join(a.meet(x, y), a.meet(x, w)),
                            &args,
                        );
                        law(
                            &mut report,
                            "sum over join",
                            a.add(x, a.join(y, w)) == a.join(a.add(x, y), a.add(x, w)),
                            &args,
                        );
                        law(
                            &mut report,
                            "sum over meet",
                            a.add(x, a.meet(y, w)) == a.meet(a.add(x, y), a.add(x, w)),
                            &args,
                        );
                        law(
                            &mut report,
                            "product over join",
                            a.mul(x, a.join(y, w)) == a.join(a.mul(x, y), a.mul(x, w)),
                            &args,
                        );
                        law(
                            &mut report,
                            "product over meet",
                            a.mul(x, a.meet(y, w)) == a.meet(a.mul(x, y), a.mul(x, w)),
                            &args,
                        );
                    }
                }
            }
        }
    }
    report
}

// ---------------------------------------------------------------------------
// Generation

/// A generated algebra together with how it was generated.
#[derive(Clone, Debug)]
pub struct Generated {
    pub algebra: FinAlgebra,
    /// Index in `algebra` of each seed, in seed order.
    pub seeds: Vec<usize>,
    pub trace: ClosureTrace,
    /// Index in the ambient of each element of `algebra` (empty when the
    /// closure ran directly on tuples).
    pub ambient_index: Vec<usize>,
}

impl Generated {
    /// Witness terms over the seeds for every element.
    pub fn witnesses(&self) -> Result<GenWitness> {
        record_witnesses(self.seeds.len(), &self.trace)
    }
}

struct Discovery<E> {
    found: Vec<E>,
    derivations: Vec<Derivation>,
    stages: Vec<usize>,
}

/// Staged closure: stage 0 holds the seeds and the constants; stage `i`
/// adds everything one operation away from stage `i-1`.
fn staged_closure<E, F>(seeds: &[E], zero: E, one: E, signature: Signature, mut apply: F) -> Discovery<E>
where
    E: Clone + Eq + std::hash::Hash,
    F: FnMut(Op, &E, &E) -> E,
{
    let mut seen: HashMap<E, usize> = HashMap::new();
    let mut d = Discovery {
        found: Vec::new(),
        derivations: Vec::new(),
        stages: Vec::new(),
    };
    let push = |d: &mut Discovery<E>, seen: &mut HashMap<E, usize>, e: E, how: Derivation, stage: usize| {
        if !seen.contains_key(&e) {
            seen.insert(e.clone(), d.found.len());
            d.found.push(e);
            d.derivations.push(how);
            d.stages.push(stage);
        }
    };
    for (i, s) in seeds.iter().enumerate() {
        push(&mut d, &mut seen, s.clone(), Derivation::Generator(i), 0);
    }
    push(&mut d, &mut seen, zero, Derivation::Zero, 0);
    push(&mut d, &mut seen, one, Derivation::One, 0);

    let mut stage_start = 0;
    let mut stage = 0;
    loop {
        let stage_end = d.found.len();
        if stage_start == stage_end {
            break;
        }
        stage += 1;
        let mut new_items: Vec<(E, Derivation)> = Vec::new();
        if signature.has_neg() {
            for a in stage_start..stage_end {
                let r = apply(Op::Neg, &d.found[a], &d.found[a]);
                new_items.push((r, Derivation::Unary(Op::Neg, a)));
            }
        }
        for &op in signature.binary_ops() {
            for a in 0..stage_end {
                for b in a.max(stage_start)..stage_end {
                    let r = apply(op, &d.found[a], &d.found[b]);
                    new_items.push((r, Derivation::Binary(op, a, b)));
                }
            }
        }
        for (e, how) in new_items {
            push(&mut d, &mut seen, e, how, stage);
        }
        stage_start = stage_end;
    }
    d
}

/// Map a discovery (in discovery order) to canonical order.
fn canonical_trace(d_derivs: Vec<Derivation>, stages: Vec<usize>, canon_of: &[usize]) -> ClosureTrace {
    let n = canon_of.len();
    let mut derivations = vec![Derivation::Zero; n];
    let mut canon_stages = vec![0; n];
    let remap = |i: usize| canon_of[i];
    for (i, d) in d_derivs.into_iter().enumerate() {
        derivations[canon_of[i]] = match d {
            Derivation::Unary(op, a) => Derivation::Unary(op, remap(a)),
            Derivation::Binary(op, a, b) => Derivation::Binary(op, remap(a), remap(b)),
            other => other,
        };
        canon_stages[canon_of[i]] = stages[i];
    }
    ClosureTrace {
        derivations,
        stages: canon_stages,
        discovery: canon_of.to_vec(),
    }
}

/// The subalgebra of `ambient` generated by `seed` under `signature`.
pub fn generate(ambient: &FinAlgebra, seed: &[usize], signature: Signature) -> Result<Generated> {
    if signature.has_neg() && ambient.neg.is_none() {
        return Err(Error::Signature("mv generation needs an ambient with negation".into()));
    }
    if let Some(&bad) = seed.iter().find(|&&s| s >= ambient.len()) {
        return Err(Error::InvalidAlgebra(format!("seed index {bad} outside the carrier")));
    }
    let d = staged_closure(seed, ambient.zero, ambient.one, signature, |op, &a, &b| ambient.apply(op, a, b));
    let mut members = d.found.clone();
    members.sort_unstable();
    let canon_of: Vec<usize> = d
        .found
        .iter()
        .map(|e| members.binary_search(e).expect("member"))
        .collect();
    let algebra = ambient.restrict(&members, signature)?;
    let seeds = seed.iter().map(|s| members.binary_search(s).expect("seed")).collect();
    Ok(Generated {
        algebra,
        seeds,
        trace: canonical_trace(d.derivations, d.stages, &canon_of),
        ambient_index: members,
    })
}

/// The subalgebra of `Ł_{n_1} × … × Ł_{n_k}` generated by tuples, computed
/// without materializing the product.
pub fn generate_tuples(chains: &[u64], seed: &[Vec<UnitRational>], signature: Signature) -> Result<Generated> {
    let coords = seed
        .iter()
        .map(|t| grid_coords(t, chains))
        .collect::<Result<Vec<_>>>()?;
    let d = staged_closure(
        &coords,
        vec![0; chains.len()],
        chains.to_vec(),
        signature,
        |op, a, b| apply_coords(op, a, b, chains),
    );
    let algebra = FinAlgebra::from_coords(chains.to_vec(), d.found.clone(), signature)?;
    let index_of = |c: &Vec<u64>| {
        algebra
            .index_of(&Element::Tuple(coords_to_tuple(c, chains)))
            .expect("generated element")
    };
    let canon_of: Vec<usize> = d.found.iter().map(index_of).collect();
    let seeds = coords.iter().map(index_of).collect();
    Ok(Generated {
        algebra,
        seeds,
        trace: canonical_trace(d.derivations, d.stages, &canon_of),
        ambient_index: Vec::new(),
    })
}

/// The MV-algebra generated inside `ambient` by the elements of `sub`.
pub fn generate_from(sub: &FinAlgebra, ambient: &FinAlgebra) -> Result<Generated> {
    let seed = locate(sub, ambient)?;
    generate(ambient, &seed, Signature::Mv)
}

/// Check that the positive subreduct `sub` generates all of `ambient`.
pub fn generated_ambient(sub: &FinAlgebra, ambient: &FinAlgebra) -> Result<Generated> {
    let g = generate_from(sub, ambient)?;
    if g.algebra.len() != ambient.len() {
        return Err(Error::NotGenerating);
    }
    Ok(g)
}

// ---------------------------------------------------------------------------
// Homomorphisms into [0,1]

/// A homomorphism from an algebra's carrier into `[0,1]`, as the value
/// vector over the canonical element order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Hom {
    values: Vec<UnitRational>,
}

impl Hom {
    pub fn new(values: Vec<UnitRational>) -> Hom {
        Hom { values }
    }

    pub fn values(&self) -> &[UnitRational] {
        &self.values
    }

    pub fn value(&self, element: usize) -> &UnitRational {
        &self.values[element]
    }

    /// Pointwise order.
    pub fn le(&self, other: &Hom) -> bool {
        self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }

    /// `f⁻¹[0]`, as sorted element indices.
    pub fn zero_set(&self) -> Vec<usize> {
        (0..self.values.len()).filter(|&i| self.values[i].is_zero()).collect()
    }

    /// Exhaustive preservation check against the algebra's declared signature,
    /// using rational arithmetic directly.
    pub fn verify(&self, a: &FinAlgebra) -> Result<()> {
        let fail = |what: String| Err(Error::InvalidMap(what));
        if self.values.len() != a.len() {
            return fail(format!("value vector has length {}, carrier {}", self.values.len(), a.len()));
        }
        let v = |i: usize| &self.values[i];
        if !v(a.zero).is_zero() {
            return fail("0 is not sent to 0".into());
        }
        if !v(a.one).is_one() {
            return fail("1 is not sent to 1".into());
        }
        if a.signature.has_neg() {
            for x in 0..a.len() {
                if *v(a.neg(x).expect("mv")) != v(x).mv_neg() {
                    return fail(format!("negation fails at {}", a.elements[x]));
                }
            }
        }
        for &op in a.signature.binary_ops() {
            for x in 0..a.len() {
                for y in 0..a.len() {
                    let expected = match op {
                        Op::Add => v(x).mv_add(v(y)),
                        Op::Mul => v(x).mv_mul(v(y)),
                        Op::Join => v(x).join(v(y)),
                        Op::Meet => v(x).meet(v(y)),
                        Op::Neg => unreachable!("not binary"),
                    };
                    if *v(a.apply(op, x, y)) != expected {
                        return fail(format!(
                            "{} fails at ({}, {})",
                            op.name(),
                            a.elements[x],
                            a.elements[y]
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

/// All homomorphisms found into `Ł_bound ⊆ [0,1]`, sorted by value vector.
#[derive(Clone, Debug)]
pub struct HomSet {
    pub homs: Vec<Hom>,
    pub bound: u64,
    /// Set when the bound is not known to capture every homomorphism.
    pub possibly_incomplete: bool,
}

impl HomSet {
    pub fn len(&self) -> usize {
        self.homs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.homs.is_empty()
    }

    /// Position of a hom with exactly these values.
    pub fn position(&self, values: &[UnitRational]) -> Option<usize> {
        self.homs.iter().position(|h| h.values == values)
    }
}

fn lcm_all(values: impl IntoIterator<Item = u64>) -> u64 {
    values.into_iter().fold(1, |acc, n| acc.lcm(&n))
}

/// Default codomain bound for table algebras: `lcm(1, …, |A|-1)` while it
/// stays small, otherwise `|A| - 1`.
pub fn default_table_bound(a: &FinAlgebra) -> u64 {
    let top = a.len().saturating_sub(1).max(1) as u64;
    let l = lcm_all(1..=top);
    if l <= 5040 {
        l
    } else {
        top
    }
}

struct HomSearch<'a> {
    a: &'a FinAlgebra,
    l: u64,
    ops: &'static [Op],
    values: Vec<Option<u64>>,
    trail: Vec<usize>,
    below: Vec<Vec<usize>>,
    above: Vec<Vec<usize>>,
    order: Vec<usize>,
    found: Vec<Vec<u64>>,
}

impl HomSearch<'_> {
    fn assign(&mut self, e: usize, v: u64) -> bool {
        let mut queue = vec![(e, v)];
        while let Some((e, v)) = queue.pop() {
            match self.values[e] {
                Some(w) if w == v => continue,
                Some(_) => return false,
                None => {}
            }
            self.values[e] = Some(v);
            self.trail.push(e);
            if let Some(ne) = self.a.neg(e).filter(|_| self.a.signature.has_neg()) {
                queue.push((ne, self.l - v));
            }
            for i in 0..self.trail.len() {
                let y = self.trail[i];
                let vy = self.values[y].expect("trail entries are assigned");
                for &op in self.ops {
                    queue.push((self.a.apply(op, e, y), op.on_grid(v, vy, self.l)));
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        for e in self.trail.drain(mark..) {
            self.values[e] = None;
        }
    }

    fn search(&mut self, pos: usize) {
        let mut pos = pos;
        while pos < self.order.len() && self.values[self.order[pos]].is_some() {
            pos += 1;
        }
        if pos == self.order.len() {
            self.found
                .push(self.values.iter().map(|v| v.expect("complete assignment")).collect());
            return;
        }
        let e = self.order[pos];
        let lo = self.below[e].iter().filter_map(|&b| self.values[b]).max().unwrap_or(0);
        let hi = self.above[e].iter().filter_map(|&b| self.values[b]).min().unwrap_or(self.l);
        for v in lo..=hi {
            let mark = self.trail.len();
            if self.assign(e, v) {
                self.search(pos + 1);
            }
            self.undo(mark);
        }
    }
}

/// Enumerate homomorphisms of the declared signature into `[0,1]`.
///
/// For tuple algebras the codomain is `Ł_L` with `L` the lcm of the ambient
/// chain orders, which captures every homomorphism; `bound`, if given, must be
/// a multiple of `L`. For table algebras the bound defaults to
/// [`default_table_bound`] and the result is flagged possibly incomplete.
pub fn enumerate_homs(a: &FinAlgebra, bound: Option<u64>) -> Result<HomSet> {
    let (l, possibly_incomplete) = match &a.repr {
        Representation::Tuples { chains } => {
            let l = lcm_all(chains.iter().copied());
            match bound {
                Some(b) if b == 0 || b % l != 0 => {
                    return Err(Error::InvalidAlgebra(format!(
                        "bound {b} must be a positive multiple of {l}"
                    )))
                }
                Some(b) => (b, false),
                None => (l, false),
            }
        }
        Representation::Tables => match bound {
            Some(0) => return Err(Error::InvalidAlgebra("bound must be positive".into())),
            Some(b) => (b, true),
            None => (default_table_bound(a), true),
        },
    };
    let n = a.len();
    let below = (0..n).map(|e| (0..n).filter(|&b| b != e && a.le(b, e)).collect()).collect();
    let above = (0..n).map(|e| (0..n).filter(|&b| b != e && a.le(e, b)).collect()).collect();
    let mut s = HomSearch {
        a,
        l,
        ops: a.signature.binary_ops(),
        values: vec![None; n],
        trail: Vec::new(),
        below,
        above,
        order: a.linear_extension(),
        found: Vec::new(),
    };
    if s.assign(a.zero, 0) && s.assign(a.one, l) {
        s.search(0);
    }
    let mut found = s.found;
    found.sort();
    found.dedup();
    let homs = found
        .into_iter()
        .map(|v| Hom::new(v.into_iter().map(|k| UnitRational::from_grid(k, l)).collect()))
        .collect();
    Ok(HomSet {
        homs,
        bound: l,
        possibly_incomplete,
    })
}

/// Whether the homs jointly separate every pair of distinct elements.
pub fn kernel_intersection_is_diagonal(a: &FinAlgebra, homs: &[Hom]) -> bool {
    (0..a.len()).all(|x| (x + 1..a.len()).all(|y| homs.iter().any(|f| f.values[x] != f.values[y])))
}

/// Extend a hom of a positive subreduct to the MV-algebra it generates, by
/// evaluating witness terms on the hom's values.
pub fn extend_hom(f: &Hom, generated: &Generated, witnesses: &GenWitness) -> Result<Hom> {
    if witnesses.generator_count() != f.values.len() {
        return Err(Error::InvalidMap(format!(
            "hom has {} values but the generation used {} generators",
            f.values.len(),
            witnesses.generator_count()
        )));
    }
    let b = &generated.algebra;
    let values = (0..b.len())
        .map(|e| witnesses.term(e).eval(&f.values))
        .collect::<Result<Vec<_>>>()?;
    let ext = Hom::new(values);
    let mv = if b.signature == Signature::Mv {
        b.clone()
    } else {
        return Err(Error::Signature("extension target must be an MV-algebra".into()));
    };
    ext.verify(&mv)
        .map_err(|e| Error::Invariant(format!("extension is not an MV homomorphism: {e}")))?;
    for (i, &s) in generated.seeds.iter().enumerate() {
        if ext.values[s] != f.values[i] {
            return Err(Error::Invariant("extension does not restrict to the original hom".into()));
        }
    }
    Ok(ext)
}

/// A map between two finite algebras, by element index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlgebraMap {
    pub images: Vec<usize>,
}

impl AlgebraMap {
    pub fn identity(n: usize) -> AlgebraMap {
        AlgebraMap { images: (0..n).collect() }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &AlgebraMap) -> AlgebraMap {
        AlgebraMap {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn is_injective(&self) -> bool {
        let set: HashSet<usize> = self.images.iter().copied().collect();
        set.len() == self.images.len()
    }

    pub fn is_surjective(&self, target_len: usize) -> bool {
        let set: HashSet<usize> = self.images.iter().copied().collect();
        set.len() == target_len
    }

    /// Check that the map preserves every operation of `source`'s signature.
    pub fn verify(&self, source: &FinAlgebra, target: &FinAlgebra) -> Result<()> {
        let fail = |m: String| Err(Error::InvalidMap(m));
        if self.images.len() != source.len() || self.images.iter().any(|&i| i >= target.len()) {
            return fail("map is not total between the carriers".into());
        }
        let f = |x: usize| self.images[x];
        if f(source.zero) != target.zero || f(source.one) != target.one {
            return fail("constants are not preserved".into());
        }
        if source.signature.has_neg() {
            if target.neg.is_none() {
                return fail("target lacks negation".into());
            }
            for x in 0..source.len() {
                if f(source.neg(x).expect("mv")) != target.neg(f(x)).expect("mv") {
                    return fail(format!("negation fails at {}", source.elements[x]));
                }
            }
        }
        let ops: &[Op] = if source.signature.has_neg() {
            &[Op::Add]
        } else {
            Signature::Mvlat.binary_ops()
        };
        for &op in ops {
            for x in 0..source.len() {
                for y in 0..source.len() {
                    if f(source.apply(op, x, y)) != target.apply(op, f(x), f(y)) {
                        return fail(format!(
                            "{} fails at ({}, {})",
                            op.name(),
                            source.elements[x],
                            source.elements[y]
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

/// An isomorphism between two algebras of the same signature, if any.
pub fn find_isomorphism(a: &FinAlgebra, b: &FinAlgebra) -> Option<AlgebraMap> {
    if a.len() != b.len() || a.signature != b.signature {
        return None;
    }
    let n = a.len();
    let order = a.linear_extension();
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let down = |alg: &FinAlgebra, x: usize| (0..alg.len()).filter(|&y| alg.le(y, x)).count();
    let down_a: Vec<usize> = (0..n).map(|x| down(a, x)).collect();
    let down_b: Vec<usize> = (0..n).map(|x| down(b, x)).collect();

    fn consistent(a: &FinAlgebra, b: &FinAlgebra, image: &[usize], x: usize) -> bool {
        let ops: &[Op] = &[Op::Add, Op::Mul, Op::Join, Op::Meet];
        for y in 0..a.len() {
            if image[y] == usize::MAX {
                continue;
            }
            for &op in ops {
                for (p, q) in [(x, y), (y, x)] {
                    let r = a.apply(op, p, q);
                    if image[r] != usize::MAX && image[r] != b.apply(op, image[p], image[q]) {
                        return false;
                    }
                }
            }
        }
        if let (Some(nx), Some(_)) = (a.neg(x), b.neg(0)) {
            if image[nx] != usize::MAX && image[nx] != b.neg(image[x]).expect("mv") {
                return false;
            }
        }
        true
    }

    #[allow(clippy::too_many_arguments)]
    fn go(
        a: &FinAlgebra,
        b: &FinAlgebra,
        order: &[usize],
        pos: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        down_a: &[usize],
        down_b: &[usize],
    ) -> bool {
        if pos == order.len() {
            return true;
        }
        let x = order[pos];
        for cand in 0..b.len() {
            if used[cand] || down_a[x] != down_b[cand] {
                continue;
            }
            image[x] = cand;
            used[cand] = true;
            if consistent(a, b, image, x) && go(a, b, order, pos + 1, image, used, down_a, down_b) {
                return true;
            }
            image[x] = usize::MAX;
            used[cand] = false;
        }
        false
    }

    if go(a, b, &order, 0, &mut image, &mut used, &down_a, &down_b) {
        let map = AlgebraMap { images: image };
        map.verify(a, b).ok().map(|_| map)
    } else {
        None
    }
}
