//! Binary relations on `0..n`: partial-order checks, covers, isomorphism
//! search and DOT output.

use std::fmt::Write as _;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    n: usize,
    bits: Vec<bool>,
}

impl Relation {
    pub fn empty(n: usize) -> Relation {
        Relation {
            n,
            bits: vec![false; n * n],
        }
    }

    pub fn identity(n: usize) -> Relation {
        Relation::from_fn(n, |i, j| i == j)
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> bool) -> Relation {
        let mut r = Relation::empty(n);
        for i in 0..n {
            for j in 0..n {
                r.bits[i * n + j] = f(i, j);
            }
        }
        r
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Relation {
        let mut r = Relation::empty(n);
        for &(i, j) in pairs {
            r.set(i, j, true);
        }
        r
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn holds(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.bits[i * self.n + j] = value;
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| (0..self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.holds(i, j))
            .collect()
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.n).all(|i| self.holds(i, i))
    }

    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || !(self.holds(i, j) && self.holds(j, i))))
    }

    pub fn is_transitive(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| !self.holds(i, j) || (0..self.n).all(|k| !self.holds(j, k) || self.holds(i, k)))
        })
    }

    pub fn is_partial_order(&self) -> bool {
        self.is_reflexive() && self.is_antisymmetric() && self.is_transitive()
    }

    pub fn is_subset_of(&self, other: &Relation) -> bool {
        self.n == other.n && self.bits.iter().zip(&other.bits).all(|(&a, &b)| !a || b)
    }

    /// Every pair of distinct points is incomparable.
    pub fn is_discrete(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || !self.holds(i, j)))
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        self.holds(i, j) || self.holds(j, i)
    }

    pub fn transitive_closure(&self) -> Relation {
        let mut r = self.clone();
        for k in 0..self.n {
            for i in 0..self.n {
                if r.holds(i, k) {
                    for j in 0..self.n {
                        if r.holds(k, j) {
                            r.set(i, j, true);
                        }
                    }
                }
            }
        }
        r
    }

    /// Covering pairs `(i, j)`: `i < j` with nothing strictly between.
    pub fn hasse_edges(&self) -> Vec<(usize, usize)> {
        let lt = |i: usize, j: usize| i != j && self.holds(i, j);
        let mut edges = Vec::new();
        for i in 0..self.n {
            for j in 0..self.n {
                if lt(i, j) && !(0..self.n).any(|k| lt(i, k) && lt(k, j)) {
                    edges.push((i, j));
                }
            }
        }
        edges
    }

    /// Apply a point permutation: `(i, j) ↦ (map[i], map[j])`.
    pub fn relabel(&self, map: &[usize]) -> Relation {
        let mut r = Relation::empty(self.n);
        for (i, j) in self.pairs() {
            r.set(map[i], map[j], true);
        }
        r
    }

    /// Hasse diagram in DOT, drawn bottom to top. Node ids are `prefix0`,
    /// `prefix1`, …; `labels` become node labels.
    pub fn to_dot(&self, name: &str, prefix: &str, labels: &[String]) -> String {
        let ids: Vec<String> = (0..self.n).map(|i| format!("{prefix}{i}")).collect();
        self.to_dot_with_ids(name, &ids, labels)
    }

    /// Like [`Relation::to_dot`] with explicit node ids.
    pub fn to_dot_with_ids(&self, name: &str, ids: &[String], labels: &[String]) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph {name} {{");
        out.push_str("  rankdir=BT;\n  node [shape=plaintext];\n");
        for (i, id) in ids.iter().enumerate().take(self.n) {
            let label = labels.get(i).unwrap_or(id);
            let _ = writeln!(out, "  {id} [label=\"{}\"];", label.replace('"', "\\\""));
        }
        for (i, j) in self.hasse_edges() {
            let _ = writeln!(out, "  {} -> {};", ids[i], ids[j]);
        }
        out.push_str("}\n");
        out
    }
}

/// An order isomorphism `map` with `a(i, j) ⇔ b(map[i], map[j])`, if any.
pub fn find_isomorphism(a: &Relation, b: &Relation) -> Option<Vec<usize>> {
    if a.n != b.n {
        return None;
    }
    let n = a.n;
    let degree = |r: &Relation, i: usize| {
        let up = (0..n).filter(|&j| r.holds(i, j)).count();
        let down = (0..n).filter(|&j| r.holds(j, i)).count();
        (up, down)
    };
    let da: Vec<_> = (0..n).map(|i| degree(a, i)).collect();
    let db: Vec<_> = (0..n).map(|i| degree(b, i)).collect();
    let mut sa = da.clone();
    let mut sb = db.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return None;
    }

    fn go(
        a: &Relation,
        b: &Relation,
        da: &[(usize, usize)],
        db: &[(usize, usize)],
        i: usize,
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        if i == a.n {
            return true;
        }
        for c in 0..b.n {
            if used[c] || da[i] != db[c] {
                continue;
            }
            let fits = (0..i).all(|k| {
                a.holds(i, k) == b.holds(c, map[k]) && a.holds(k, i) == b.holds(map[k], c)
            }) && a.holds(i, i) == b.holds(c, c);
            if !fits {
                continue;
            }
            map.push(c);
            used[c] = true;
            if go(a, b, da, db, i + 1, map, used) {
                return true;
            }
            map.pop();
            used[c] = false;
        }
        false
    }

    let mut map = Vec::with_capacity(n);
    let mut used = vec![false; n];
    go(a, b, &da, &db, 0, &mut map, &mut used).then_some(map)
}
