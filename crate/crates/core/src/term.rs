//! Terms over the MV signatures, their evaluation, separating terms and
//! generation witnesses.

use std::fmt;
use std::marker::PhantomData;

use num_rational::Ratio;
use num_traits::One;

use crate::algebra::{ClosureTrace, Derivation, Op};
use crate::error::{Error, Result};
use crate::qunit::{Scalar, Unit};

/// A term over `{⊕, ⊙, *, ∨, ∧, 0, 1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Var(usize),
    Zero,
    One,
    Add(Box<Term>, Box<Term>),
    Mul(Box<Term>, Box<Term>),
    Neg(Box<Term>),
    Join(Box<Term>, Box<Term>),
    Meet(Box<Term>, Box<Term>),
}

/// Which signature a term lives in. Positive terms contain no negation.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum TermSignature {
    Full,
    Positive,
}

/// Something a term can be evaluated in.
pub trait Interpretation {
    type Value: Clone;

    fn zero(&self) -> Self::Value;
    fn one(&self) -> Self::Value;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn join(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn meet(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn neg(&self, a: &Self::Value) -> Result<Self::Value>;
}

/// The standard MV-algebra `[0,1]` over exact rationals.
#[derive(Copy, Clone, Debug)]
pub struct StandardInterval<T>(PhantomData<T>);

impl<T> StandardInterval<T> {
    pub fn new() -> Self {
        StandardInterval(PhantomData)
    }
}

impl<T> Default for StandardInterval<T> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Scalar> Interpretation for StandardInterval<T> {
    type Value = Unit<T>;

    fn zero(&self) -> Unit<T> {
        Unit::zero()
    }
    fn one(&self) -> Unit<T> {
        Unit::one()
    }
    fn add(&self, a: &Unit<T>, b: &Unit<T>) -> Unit<T> {
        a.mv_add(b)
    }
    fn mul(&self, a: &Unit<T>, b: &Unit<T>) -> Unit<T> {
        a.mv_mul(b)
    }
    fn join(&self, a: &Unit<T>, b: &Unit<T>) -> Unit<T> {
        a.join(b)
    }
    fn meet(&self, a: &Unit<T>, b: &Unit<T>) -> Unit<T> {
        a.meet(b)
    }
    fn neg(&self, a: &Unit<T>) -> Result<Unit<T>> {
        Ok(a.mv_neg())
    }
}

impl Term {
    pub fn var(i: usize) -> Term {
        Term::Var(i)
    }

    pub fn add(l: Term, r: Term) -> Term {
        Term::Add(Box::new(l), Box::new(r))
    }

    pub fn mul(l: Term, r: Term) -> Term {
        Term::Mul(Box::new(l), Box::new(r))
    }

    pub fn neg(t: Term) -> Term {
        Term::Neg(Box::new(t))
    }

    pub fn join(l: Term, r: Term) -> Term {
        Term::Join(Box::new(l), Box::new(r))
    }

    pub fn meet(l: Term, r: Term) -> Term {
        Term::Meet(Box::new(l), Box::new(r))
    }

    pub fn signature(&self) -> TermSignature {
        if self.is_neg_free() {
            TermSignature::Positive
        } else {
            TermSignature::Full
        }
    }

    pub fn is_neg_free(&self) -> bool {
        match self {
            Term::Var(_) | Term::Zero | Term::One => true,
            Term::Neg(_) => false,
            Term::Add(l, r) | Term::Mul(l, r) | Term::Join(l, r) | Term::Meet(l, r) => {
                l.is_neg_free() && r.is_neg_free()
            }
        }
    }

    /// True if the term uses only variables, `⊕` and `⊙`.
    pub fn is_add_mul_only(&self) -> bool {
        match self {
            Term::Var(_) => true,
            Term::Add(l, r) | Term::Mul(l, r) => l.is_add_mul_only() && r.is_add_mul_only(),
            _ => false,
        }
    }

    /// One more than the largest variable index, or 0 for closed terms.
    pub fn arity(&self) -> usize {
        match self {
            Term::Var(i) => i + 1,
            Term::Zero | Term::One => 0,
            Term::Neg(t) => t.arity(),
            Term::Add(l, r) | Term::Mul(l, r) | Term::Join(l, r) | Term::Meet(l, r) => {
                l.arity().max(r.arity())
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) | Term::Zero | Term::One => 1,
            Term::Neg(t) => 1 + t.depth(),
            Term::Add(l, r) | Term::Mul(l, r) | Term::Join(l, r) | Term::Meet(l, r) => {
                1 + l.depth().max(r.depth())
            }
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) | Term::Zero | Term::One => 1,
            Term::Neg(t) => 1 + t.size(),
            Term::Add(l, r) | Term::Mul(l, r) | Term::Join(l, r) | Term::Meet(l, r) => {
                1 + l.size() + r.size()
            }
        }
    }

    /// Evaluate in any interpretation.
    pub fn interpret<I: Interpretation>(&self, interp: &I, args: &[I::Value]) -> Result<I::Value> {
        let needed = self.arity();
        if args.len() < needed {
            return Err(Error::Arity {
                needed,
                given: args.len(),
            });
        }
        self.interpret_unchecked(interp, args)
    }

    fn interpret_unchecked<I: Interpretation>(&self, interp: &I, args: &[I::Value]) -> Result<I::Value> {
        Ok(match self {
            Term::Var(i) => args[*i].clone(),
            Term::Zero => interp.zero(),
            Term::One => interp.one(),
            Term::Neg(t) => interp.neg(&t.interpret_unchecked(interp, args)?)?,
            Term::Add(l, r) => interp.add(
                &l.interpret_unchecked(interp, args)?,
                &r.interpret_unchecked(interp, args)?,
            ),
            Term::Mul(l, r) => interp.mul(
                &l.interpret_unchecked(interp, args)?,
                &r.interpret_unchecked(interp, args)?,
            ),
            Term::Join(l, r) => interp.join(
                &l.interpret_unchecked(interp, args)?,
                &r.interpret_unchecked(interp, args)?,
            ),
            Term::Meet(l, r) => interp.meet(
                &l.interpret_unchecked(interp, args)?,
                &r.interpret_unchecked(interp, args)?,
            ),
        })
    }

    /// Evaluate in the standard MV-algebra `[0,1]`.
    pub fn eval<T: Scalar>(&self, args: &[Unit<T>]) -> Result<Unit<T>> {
        self.interpret(&StandardInterval::<T>::new(), args)
    }

    /// Parse the prefix S-expression form produced by `Display`.
    pub fn parse_sexpr(text: &str) -> Result<Term> {
        let tokens = tokenize(text);
        let mut pos = 0;
        let term = parse_tokens(&tokens, &mut pos)?;
        if pos != tokens.len() {
            return Err(Error::ParseTerm(format!("trailing input after token {pos}")));
        }
        Ok(term)
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(i) => write!(f, "v{i}"),
            Term::Zero => write!(f, "0"),
            Term::One => write!(f, "1"),
            Term::Neg(t) => write!(f, "(neg {t})"),
            Term::Add(l, r) => write!(f, "(add {l} {r})"),
            Term::Mul(l, r) => write!(f, "(mul {l} {r})"),
            Term::Join(l, r) => write!(f, "(join {l} {r})"),
            Term::Meet(l, r) => write!(f, "(meet {l} {r})"),
        }
    }
}

fn tokenize(text: &str) -> Vec<String> {
    text.replace('(', " ( ")
        .replace(')', " ) ")
        .split_whitespace()
        .map(str::to_string)
        .collect()
}

fn parse_tokens(tokens: &[String], pos: &mut usize) -> Result<Term> {
    let tok = tokens
        .get(*pos)
        .ok_or_else(|| Error::ParseTerm("unexpected end of input".into()))?;
    *pos += 1;
    match tok.as_str() {
        "0" => Ok(Term::Zero),
        "1" => Ok(Term::One),
        "(" => {
            let head = tokens
                .get(*pos)
                .ok_or_else(|| Error::ParseTerm("missing operator".into()))?
                .clone();
            *pos += 1;
            let term = match head.as_str() {
                "neg" => Term::neg(parse_tokens(tokens, pos)?),
                "add" | "mul" | "join" | "meet" => {
                    let l = parse_tokens(tokens, pos)?;
                    let r = parse_tokens(tokens, pos)?;
                    match head.as_str() {
                        "add" => Term::add(l, r),
                        "mul" => Term::mul(l, r),
                        "join" => Term::join(l, r),
                        _ => Term::meet(l, r),
                    }
                }
                other => return Err(Error::ParseTerm(format!("unknown operator `{other}`"))),
            };
            match tokens.get(*pos).map(String::as_str) {
                Some(")") => {
                    *pos += 1;
                    Ok(term)
                }
                _ => Err(Error::ParseTerm(format!("expected `)` after `{head}`"))),
            }
        }
        v if v.starts_with('v') => v[1..]
            .parse()
            .map(Term::Var)
            .map_err(|_| Error::ParseTerm(format!("bad variable `{v}`"))),
        other => Err(Error::ParseTerm(format!("unexpected token `{other}`"))),
    }
}

/// `n·t` as a balanced tree of `⊕`.
pub fn scalar_multiple(n: u64, t: &Term) -> Result<Term> {
    balanced(n, t, Term::add)
}

/// `t^n` as a balanced tree of `⊙`.
pub fn power(t: &Term, n: u64) -> Result<Term> {
    balanced(n, t, Term::mul)
}

fn balanced(n: u64, t: &Term, combine: fn(Term, Term) -> Term) -> Result<Term> {
    if n == 0 {
        return Err(Error::ZeroMultiplier);
    }
    fn go(n: u64, t: &Term, combine: fn(Term, Term) -> Term) -> Term {
        if n == 1 {
            t.clone()
        } else {
            let right = n / 2;
            combine(go(n - right, t, combine), go(right, t, combine))
        }
    }
    Ok(go(n, t, combine))
}

/// One round of the separating-term construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeparatorStep {
    /// `x ≤ 1/2 < y`: square, then multiply by `n`.
    SquareThenScale { n: u64 },
    /// `x < 1/2 = y`: double, then raise to the `m`-th power.
    DoubleThenPower { m: u64 },
    /// `x < y < 1/2`: multiply by `k`.
    Scale { k: u64 },
    /// `1/2 < x < y`: raise to the `h`-th power.
    Power { h: u64 },
}

/// A unary `{⊕, ⊙}` term sending `x` to 0 and `y` to 1.
#[derive(Clone, Debug)]
pub struct Separator {
    pub term: Term,
    pub steps: Vec<SeparatorStep>,
    /// Number of rounds used.
    pub depth: usize,
    /// Bound on the number of rounds for this input.
    pub depth_cap: usize,
}

fn bit_length<T: Scalar>(v: &T) -> usize {
    let two = T::one() + T::one();
    let mut v = v.clone();
    let mut bits = 0;
    while !v.is_zero() {
        v = v / two.clone();
        bits += 1;
    }
    bits
}

/// Round cap for separating `x` from `y`: four times the total bit length of
/// both denominators.
pub fn separator_depth_cap<T: Scalar>(x: &Unit<T>, y: &Unit<T>) -> usize {
    4 * (bit_length(x.denom()) + bit_length(y.denom()))
}

fn ceil_inverse<T: Scalar>(r: &Ratio<T>) -> Result<u64> {
    (Ratio::one() / r.clone())
        .ceil()
        .to_integer()
        .to_u64()
        .ok_or_else(|| Error::Invariant("multiplier does not fit in u64".into()))
}

fn floor_inverse<T: Scalar>(r: &Ratio<T>) -> Result<u64> {
    (Ratio::one() / r.clone())
        .floor()
        .to_integer()
        .to_u64()
        .ok_or_else(|| Error::Invariant("multiplier does not fit in u64".into()))
}

/// Build a term `t` in `{⊕, ⊙}` with `t(x) = 0` and `t(y) = 1`.
///
/// Each round applies one of four moves to the current pair. The two
/// terminal moves finish the job; the other two at least double the gap
/// `y - x`, so the number of rounds is logarithmic in the denominators.
pub fn synthesize_separator<T: Scalar>(x: &Unit<T>, y: &Unit<T>) -> Result<Separator> {
    if x >= y {
        return Err(Error::NotSeparable {
            x: x.to_string(),
            y: y.to_string(),
        });
    }
    let half: Ratio<T> = Ratio::new(T::one(), T::one() + T::one());
    let depth_cap = separator_depth_cap(x, y);
    let mut term = Term::var(0);
    let mut steps = Vec::new();
    let (mut cx, mut cy) = (x.clone(), y.clone());

    while !(cx.is_zero() && cy.is_one()) {
        if steps.len() >= depth_cap {
            return Err(Error::Invariant(format!(
                "separator for ({x}, {y}) exceeded {depth_cap} rounds"
            )));
        }
        let (rx, ry) = (cx.as_ratio().clone(), cy.as_ratio().clone());
        if rx <= half && ry > half {
            let sq = cy.power(2);
            let n = ceil_inverse(sq.as_ratio())?;
            term = scalar_multiple(n, &power(&term, 2)?)?;
            cx = cx.power(2).scale(n);
            cy = sq.scale(n);
            steps.push(SeparatorStep::SquareThenScale { n });
        } else if rx < half && ry >= half {
            let doubled = cx.scale(2);
            let m = ceil_inverse(doubled.mv_neg().as_ratio())?;
            term = power(&scalar_multiple(2, &term)?, m)?;
            cx = doubled.power(m);
            cy = cy.scale(2).power(m);
            steps.push(SeparatorStep::DoubleThenPower { m });
        } else if ry < half {
            let k = floor_inverse(&ry)?;
            term = scalar_multiple(k, &term)?;
            cx = cx.scale(k);
            cy = cy.scale(k);
            steps.push(SeparatorStep::Scale { k });
        } else {
            let h = ceil_inverse(cx.mv_neg().as_ratio())? - 1;
            term = power(&term, h)?;
            cx = cx.power(h);
            cy = cy.power(h);
            steps.push(SeparatorStep::Power { h });
        }
    }
    Ok(Separator {
        term,
        depth: steps.len(),
        steps,
        depth_cap,
    })
}

/// One full-signature term per element of a generated algebra, expressing it
/// in terms of the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenWitness {
    terms: Vec<Term>,
    generators: usize,
}

impl GenWitness {
    pub fn term(&self, element: usize) -> &Term {
        &self.terms[element]
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn generator_count(&self) -> usize {
        self.generators
    }
}

/// Turn a closure trace into witness terms. Generators become variables,
/// the constants become `0`/`1`, everything else replays its first
/// derivation.
pub fn record_witnesses(generators: usize, trace: &ClosureTrace) -> Result<GenWitness> {
    let n = trace.derivations.len();
    let mut terms: Vec<Option<Term>> = vec![None; n];
    if trace.discovery.len() != n {
        return Err(Error::Invariant("trace discovery order does not cover the carrier".into()));
    }
    let lookup = |terms: &[Option<Term>], i: usize| -> Result<Term> {
        terms
            .get(i)
            .cloned()
            .flatten()
            .ok_or_else(|| Error::Invariant(format!("trace uses element {i} before deriving it")))
    };
    for &e in &trace.discovery {
        let d = trace
            .derivations
            .get(e)
            .ok_or_else(|| Error::Invariant(format!("element {e} outside the carrier")))?;
        let t = match d {
            Derivation::Generator(g) => {
                if *g >= generators {
                    return Err(Error::Invariant(format!("generator index {g} out of range")));
                }
                Term::var(*g)
            }
            Derivation::Zero => Term::Zero,
            Derivation::One => Term::One,
            Derivation::Unary(Op::Neg, a) => Term::neg(lookup(&terms, *a)?),
            Derivation::Unary(op, _) => {
                return Err(Error::Invariant(format!("{op:?} is not unary")));
            }
            Derivation::Binary(op, a, b) => {
                let (l, r) = (lookup(&terms, *a)?, lookup(&terms, *b)?);
                match op {
                    Op::Add => Term::add(l, r),
                    Op::Mul => Term::mul(l, r),
                    Op::Join => Term::join(l, r),
                    Op::Meet => Term::meet(l, r),
                    Op::Neg => return Err(Error::Invariant("negation is not binary".into())),
                }
            }
        };
        if terms[e].is_some() {
            return Err(Error::Invariant(format!("element {e} derived twice")));
        }
        terms[e] = Some(t);
    }
    let terms = terms
        .into_iter()
        .enumerate()
        .map(|(i, t)| t.ok_or_else(|| Error::Invariant(format!("element {i} has no derivation"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(GenWitness { terms, generators })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::UnitRational;

    fn q(s: &str) -> UnitRational {
        s.parse().unwrap()
    }

    #[test]
    fn eval_basics() {
        assert_eq!(Term::var(0).eval(&[q("1/3")]).unwrap(), q("1/3"));
        let t = Term::add(Term::var(0), Term::var(0));
        assert_eq!(t.eval(&[q("3/4")]).unwrap(), q("1"));
        let t = Term::neg(Term::mul(Term::var(0), Term::var(1)));
        assert_eq!(t.eval(&[q("1/2"), q("1/2")]).unwrap(), q("1"));
    }

    #[test]
    fn eval_arity_mismatch() {
        let t = Term::add(Term::var(0), Term::var(2));
        assert!(matches!(
            t.eval(&[q("0"), q("1")]),
            Err(Error::Arity { needed: 3, given: 2 })
        ));
    }

    #[test]
    fn multiples_and_powers() {
        let v = Term::var(0);
        assert_eq!(scalar_multiple(2, &v).unwrap().eval(&[q("1/3")]).unwrap(), q("2/3"));
        assert_eq!(power(&v, 2).unwrap().eval(&[q("3/4")]).unwrap(), q("1/2"));
        // x^h vanishes once x ≤ (h-1)/h
        for h in 1..8u64 {
            let x = UnitRational::from_grid(h - 1, h);
            assert!(power(&v, h).unwrap().eval(&[x]).unwrap().is_zero());
        }
        assert!(matches!(scalar_multiple(0, &v), Err(Error::ZeroMultiplier)));
        assert!(matches!(power(&v, 0), Err(Error::ZeroMultiplier)));
        let t = scalar_multiple(5, &v).unwrap();
        assert_eq!(t.depth(), 4);
        assert_eq!(t.size(), 9);
    }

    #[test]
    fn separator_identity_when_already_separated() {
        let s = synthesize_separator(&q("0"), &q("1")).unwrap();
        assert_eq!(s.term, Term::var(0));
        assert!(s.steps.is_empty());
    }

    #[test]
    fn separator_worked_cases() {
        // (1/4, 1/2): double then square
        let s = synthesize_separator(&q("1/4"), &q("1/2")).unwrap();
        assert_eq!(s.steps, vec![SeparatorStep::DoubleThenPower { m: 2 }]);
        assert_eq!(s.term.to_string(), "(mul (add v0 v0) (add v0 v0))");
        assert_eq!(s.term.eval(&[q("1/4")]).unwrap(), q("0"));
        assert_eq!(s.term.eval(&[q("1/2")]).unwrap(), q("1"));

        // (1/2, 3/4): square then double
        let s = synthesize_separator(&q("1/2"), &q("3/4")).unwrap();
        assert_eq!(s.steps, vec![SeparatorStep::SquareThenScale { n: 2 }]);
        assert_eq!(s.term.to_string(), "(add (mul v0 v0) (mul v0 v0))");
        assert_eq!(s.term.eval(&[q("1/2")]).unwrap(), q("0"));
        assert_eq!(s.term.eval(&[q("3/4")]).unwrap(), q("1"));
    }

    #[test]
    fn separator_recursive_cases() {
        for (x, y) in [("1/20", "1/19"), ("18/19", "19/20"), ("0", "1/7"), ("2/3", "1"), ("1/3", "2/5")] {
            let (x, y) = (q(x), q(y));
            let s = synthesize_separator(&x, &y).unwrap();
            assert!(s.term.is_add_mul_only());
            assert!(s.depth <= s.depth_cap);
            assert_eq!(s.term.eval(&[x]).unwrap(), q("0"));
            assert_eq!(s.term.eval(&[y]).unwrap(), q("1"));
        }
    }

    #[test]
    fn separator_rejects_unordered() {
        assert!(synthesize_separator(&q("1/2"), &q("1/2")).is_err());
        assert!(synthesize_separator(&q("2/3"), &q("1/2")).is_err());
    }

    #[test]
    fn sexpr_round_trip() {
        let t = Term::join(
            Term::neg(Term::add(Term::mul(Term::var(0), Term::var(0)), Term::var(1))),
            Term::meet(Term::Zero, Term::One),
        );
        let text = t.to_string();
        assert_eq!(text, "(join (neg (add (mul v0 v0) v1)) (meet 0 1))");
        assert_eq!(Term::parse_sexpr(&text).unwrap(), t);
        assert!(Term::parse_sexpr("(add v0)").is_err());
        assert!(Term::parse_sexpr("(pow v0 v0)").is_err());
        assert!(Term::parse_sexpr("v0 v1").is_err());
    }

    #[test]
    fn signature_tag() {
        assert_eq!(Term::add(Term::var(0), Term::One).signature(), TermSignature::Positive);
        assert_eq!(Term::neg(Term::var(0)).signature(), TermSignature::Full);
    }
}
