//! Single-colored operads in sets, given by finite tables up to an arity bound.

pub mod bo;
pub mod builtin;
pub mod coherence;
pub mod ext;
pub mod json;
pub mod pointed;
pub mod total;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

pub use builtin::{builtin_operad, Builtin};
pub use pointed::PointedMap;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OperadError {
    #[error("unitality: {0}")]
    Unitality(String),
    #[error("axiom `{axiom}` fails: {detail}")]
    Axiom { axiom: &'static str, detail: String },
    #[error("table: {0}")]
    Table(String),
    #[error("arity {arity} exceeds the bound {bound}")]
    Bound { arity: usize, bound: usize },
    #[error("{0}")]
    Other(String),
}

/// An element of `O(arity)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Op {
    pub arity: usize,
    pub idx: usize,
}

#[derive(Clone, Debug)]
pub struct DiscreteOperad {
    pub name: String,
    pub bound: usize,
    /// `names[n][k]` names the `k`-th element of `O(n)`.
    pub names: Vec<Vec<String>>,
    pub unit: Op,
    /// `(f, i, g) ↦ f ∘_i g` whenever the result has arity ≤ bound.
    comp: HashMap<(Op, usize, Op), Op>,
    /// `(f, π) ↦ f·π` with `(f·π)(x₀, …) = f(x_{π(0)}, …)`.
    act: HashMap<(Op, Vec<usize>), Op>,
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == used.len() {
            out.push(cur.clone());
            return;
        }
        for k in 0..used.len() {
            if !used[k] {
                used[k] = true;
                cur.push(k);
                go(cur, used, out);
                cur.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

impl DiscreteOperad {
    /// Assembles an operad from raw tables; identities are filled in for the
    /// unit and for identity permutations. Run [`DiscreteOperad::check_axioms`]
    /// before trusting the result.
    pub fn from_tables(
        name: &str,
        names: Vec<Vec<String>>,
        unit: Op,
        comp: HashMap<(Op, usize, Op), Op>,
        act: HashMap<(Op, Vec<usize>), Op>,
    ) -> Result<Self, OperadError> {
        let bound = names.len().saturating_sub(1);
        if unit.arity != 1 || names.get(1).map_or(true, |v| unit.idx >= v.len()) {
            return Err(OperadError::Unitality("no unit element in arity 1".into()));
        }
        let mut o = DiscreteOperad { name: name.to_string(), bound, names, unit, comp, act };
        for n in 0..=bound {
            let id: Vec<usize> = (0..n).collect();
            for f in o.ops(n) {
                o.act.entry((f, id.clone())).or_insert(f);
                for i in 0..n {
                    o.comp.entry((f, i, unit)).or_insert(f);
                }
                o.comp.entry((unit, 0, f)).or_insert(f);
            }
        }
        for n in 0..=bound {
            for f in o.ops(n) {
                for i in 0..n {
                    for m in 0..=bound + 1 - n {
                        for g in o.ops(m) {
                            if !o.comp.contains_key(&(f, i, g)) {
                                return Err(OperadError::Table(format!(
                                    "missing composite {} ∘_{} {}",
                                    o.op_name(f),
                                    i + 1,
                                    o.op_name(g)
                                )));
                            }
                        }
                    }
                }
                for p in permutations(n) {
                    if !o.act.contains_key(&(f, p.clone())) {
                        return Err(OperadError::Table(format!("missing action of {:?} on {}", p, o.op_name(f))));
                    }
                }
            }
        }
        Ok(o)
    }

    pub fn count(&self, n: usize) -> usize {
        self.names.get(n).map_or(0, |v| v.len())
    }

    pub fn ops(&self, n: usize) -> Vec<Op> {
        (0..self.count(n)).map(|idx| Op { arity: n, idx }).collect()
    }

    pub fn op_name(&self, f: Op) -> &str {
        &self.names[f.arity][f.idx]
    }

    pub fn op_by_name(&self, arity: usize, name: &str) -> Option<Op> {
        self.names.get(arity)?.iter().position(|s| s == name).map(|idx| Op { arity, idx })
    }

    /// Searches every arity for `name`.
    pub fn find(&self, name: &str) -> Option<Op> {
        (0..=self.bound).find_map(|n| self.op_by_name(n, name))
    }

    /// `f ∘_i g` with `i` counted from 0.
    pub fn compose(&self, f: Op, i: usize, g: Op) -> Result<Op, OperadError> {
        if i >= f.arity {
            return Err(OperadError::Other(format!("no input {} in {}", i + 1, self.op_name(f))));
        }
        let arity = f.arity + g.arity - 1;
        if arity > self.bound {
            return Err(OperadError::Bound { arity, bound: self.bound });
        }
        self.comp
            .get(&(f, i, g))
            .copied()
            .ok_or_else(|| OperadError::Table(format!("no composite {} ∘_{} {}", self.op_name(f), i + 1, self.op_name(g))))
    }

    pub fn act(&self, f: Op, perm: &[usize]) -> Op {
        self.act[&(f, perm.to_vec())]
    }

    /// `γ(f; g₀, …, g_{n-1})`.
    pub fn gamma(&self, f: Op, gs: &[Op]) -> Result<Op, OperadError> {
        assert_eq!(f.arity, gs.len());
        // nullary slots first so intermediate arities never exceed the result
        let mut h = f;
        let mut rest: Vec<Op> = gs.to_vec();
        for i in (0..rest.len()).rev() {
            if rest[i].arity == 0 {
                h = self.compose(h, i, rest.remove(i))?;
            }
        }
        for (i, &g) in rest.iter().enumerate().rev() {
            h = self.compose(h, i, g)?;
        }
        Ok(h)
    }

    /// Every nullary set is a singleton.
    pub fn is_unital(&self) -> bool {
        self.count(0) == 1
    }

    pub fn nullary(&self) -> Option<Op> {
        self.is_unital().then_some(Op { arity: 0, idx: 0 })
    }

    pub fn unary_inverse(&self, f: Op) -> Option<Op> {
        self.ops(1).into_iter().find(|&g| self.comp[&(f, 0, g)] == self.unit && self.comp[&(g, 0, f)] == self.unit)
    }

    /// `O(1)` is a group under composition.
    pub fn unary_is_group(&self) -> bool {
        self.ops(1).into_iter().all(|f| self.unary_inverse(f).is_some())
    }

    /// Unit, associativity and equivariance laws for every instance whose
    /// arities stay within `max_arity`.
    pub fn check_axioms(&self, max_arity: usize) -> Result<usize, OperadError> {
        let b = max_arity.min(self.bound);
        let fail = |axiom, detail: String| Err(OperadError::Axiom { axiom, detail });
        let mut checked = 0usize;
        for n in 0..=b {
            for f in self.ops(n) {
                if self.compose(self.unit, 0, f)? != f {
                    return fail("left unit", self.op_name(f).into());
                }
                for i in 0..n {
                    if self.compose(f, i, self.unit)? != f {
                        return fail("right unit", format!("{} at {}", self.op_name(f), i + 1));
                    }
                }
                let perms = permutations(n);
                for p in &perms {
                    for q in &perms {
                        let qp: Vec<usize> = (0..n).map(|t| q[p[t]]).collect();
                        checked += 1;
                        if self.act(self.act(f, p), q) != self.act(f, &qp) {
                            return fail("action", format!("{} by {:?} then {:?}", self.op_name(f), p, q));
                        }
                    }
                }
            }
        }
        for n in 1..=b {
            for m in 0..=b + 1 - n {
                for f in self.ops(n) {
                    for g in self.ops(m) {
                        for i in 0..n {
                            let fg = self.compose(f, i, g)?;
                            for p in permutations(n) {
                                checked += 1;
                                let (lhs, rhs) = self.left_equivariance(f, &p, i, g)?;
                                if lhs != rhs {
                                    return fail("equivariance", format!("({}·{:?}) ∘_{} {}", self.op_name(f), p, i + 1, self.op_name(g)));
                                }
                            }
                            for r in permutations(m) {
                                checked += 1;
                                let lhs = self.compose(f, i, self.act(g, &r))?;
                                let block: Vec<usize> =
                                    (0..n + m - 1).map(|t| if t >= i && t < i + m { i + r[t - i] } else { t }).collect();
                                if lhs != self.act(fg, &block) {
                                    return fail("equivariance", format!("{} ∘_{} ({}·{:?})", self.op_name(f), i + 1, self.op_name(g), r));
                                }
                            }
                            for k in 0..=b + 1 - (n + m - 1) {
                                for h in self.ops(k) {
                                    // sequential
                                    for j in 0..m {
                                        checked += 1;
                                        let lhs = self.compose(fg, i + j, h)?;
                                        let rhs = self.compose(f, i, self.compose(g, j, h)?)?;
                                        if lhs != rhs {
                                            return fail(
                                                "associativity",
                                                format!("{} {} {} at {} {}", self.op_name(f), self.op_name(g), self.op_name(h), i + 1, j + 1),
                                            );
                                        }
                                    }
                                    // parallel
                                    for l in i + 1..n {
                                        if n + k - 1 > b {
                                            break;
                                        }
                                        checked += 1;
                                        let lhs = self.compose(fg, l + m - 1, h)?;
                                        let rhs = self.compose(self.compose(f, l, h)?, i, g)?;
                                        if lhs != rhs {
                                            return fail(
                                                "associativity",
                                                format!("{} {} {} at {} {}", self.op_name(f), self.op_name(g), self.op_name(h), i + 1, l + 1),
                                            );
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(checked)
    }

    /// Both sides of `(f·π) ∘_i g = (f ∘_k g)·π̃` with `π(k) = i`.
    fn left_equivariance(&self, f: Op, p: &[usize], i: usize, g: Op) -> Result<(Op, Op), OperadError> {
        let (n, m) = (f.arity, g.arity);
        let lhs = self.compose(self.act(f, p), i, g)?;
        let k = p.iter().position(|&x| x == i).unwrap();
        let idx = |j: usize| if j < i { j } else { j + m - 1 };
        let mut tilde = Vec::with_capacity(n + m - 1);
        for (t, &pt) in p.iter().enumerate() {
            if t == k {
                tilde.extend(i..i + m);
            } else {
                tilde.push(idx(pt));
            }
        }
        let rhs = self.act(self.compose(f, k, g)?, &tilde);
        Ok((lhs, rhs))
    }
}

impl fmt::Display for DiscreteOperad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (arity ≤ {}):", self.name, self.bound)?;
        for n in 0..=self.bound {
            write!(f, " |O({n})|={}", self.count(n))?;
        }
        Ok(())
    }
}
