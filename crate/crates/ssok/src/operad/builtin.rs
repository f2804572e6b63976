//! Comm, Ass, AssInv and Triv, generated from word models.

use std::collections::{BTreeSet, HashMap};
use std::str::FromStr;

use super::{permutations, DiscreteOperad, Op};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Builtin {
    Comm,
    Ass,
    AssInv,
    Triv,
}

impl Builtin {
    pub const ALL: [Builtin; 4] = [Builtin::Comm, Builtin::Ass, Builtin::AssInv, Builtin::Triv];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::Comm => "Comm",
            Builtin::Ass => "Ass",
            Builtin::AssInv => "AssInv",
            Builtin::Triv => "Triv",
        }
    }
}

impl FromStr for Builtin {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        Builtin::ALL
            .into_iter()
            .find(|b| b.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown operad `{s}` (expected Comm, Ass, AssInv or Triv)"))
    }
}

/// A letter of a word: input index and whether `τ` is applied to it.
type Letter = (usize, bool);

const VARS: &[u8] = b"abcdefgh";

/// `ab`, `a~b`, `~a`; the nullary word is `1`.
pub fn word_name(w: &[Letter]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter().map(|&(j, neg)| format!("{}{}", if neg { "~" } else { "" }, VARS[j] as char)).collect()
}

fn substitute(f: &[Letter], i: usize, g: &[Letter]) -> Vec<Letter> {
    let m = g.iter().len();
    let mut out = Vec::new();
    for &(j, neg) in f {
        if j == i {
            let block = g.iter().map(|&(k, s)| (k + i, s ^ neg));
            if neg {
                out.extend(block.rev());
            } else {
                out.extend(block);
            }
        } else if j > i {
            out.push((j + m - 1, neg));
        } else {
            out.push((j, neg));
        }
    }
    out
}

fn words(n: usize, signed: bool) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    for p in permutations(n) {
        let signs = if signed { 1usize << n } else { 1 };
        for mask in 0..signs {
            out.push(p.iter().map(|&j| (j, mask & (1 << j) != 0)).collect());
        }
    }
    out
}

fn from_words(name: &str, bound: usize, signed: bool) -> DiscreteOperad {
    let all: Vec<Vec<Vec<Letter>>> = (0..=bound).map(|n| words(n, signed)).collect();
    let index: HashMap<&Vec<Letter>, Op> = all
        .iter()
        .enumerate()
        .flat_map(|(n, ws)| ws.iter().enumerate().map(move |(idx, w)| (w, Op { arity: n, idx })))
        .collect();
    let mut comp = HashMap::new();
    let mut act = HashMap::new();
    for n in 0..=bound {
        for (fi, f) in all[n].iter().enumerate() {
            let fop = Op { arity: n, idx: fi };
            for i in 0..n {
                for m in 0..=bound + 1 - n {
                    for (gi, g) in all[m].iter().enumerate() {
                        let h = substitute(f, i, g);
                        comp.insert((fop, i, Op { arity: m, idx: gi }), index[&h]);
                    }
                }
            }
            for p in permutations(n) {
                let w: Vec<Letter> = f.iter().map(|&(j, s)| (p[j], s)).collect();
                act.insert((fop, p), index[&w]);
            }
        }
    }
    let names = all.iter().map(|ws| ws.iter().map(|w| word_name(w)).collect()).collect();
    let unit = index[&vec![(0, false)]];
    DiscreteOperad::from_tables(name, names, unit, comp, act).expect("word model tables are complete")
}

fn comm(bound: usize) -> DiscreteOperad {
    let names = (0..=bound).map(|n| vec![format!("c{n}")]).collect();
    let mut comp = HashMap::new();
    let mut act = HashMap::new();
    for n in 0..=bound {
        let f = Op { arity: n, idx: 0 };
        for i in 0..n {
            for m in 0..=bound + 1 - n {
                comp.insert((f, i, Op { arity: m, idx: 0 }), Op { arity: n + m - 1, idx: 0 });
            }
        }
        for p in permutations(n) {
            act.insert((f, p), f);
        }
    }
    DiscreteOperad::from_tables("Comm", names, Op { arity: 1, idx: 0 }, comp, act).unwrap()
}

fn triv(bound: usize) -> DiscreteOperad {
    let mut names = vec![Vec::new(); bound.max(1) + 1];
    names[1].push("id".to_string());
    DiscreteOperad::from_tables("Triv", names, Op { arity: 1, idx: 0 }, HashMap::new(), HashMap::new()).unwrap()
}

/// The builtin operad truncated at arity `bound`.
pub fn builtin_operad(b: Builtin, bound: usize) -> DiscreteOperad {
    match b {
        Builtin::Comm => comm(bound),
        Builtin::Ass => from_words("Ass", bound, false),
        Builtin::AssInv => from_words("AssInv", bound, true),
        Builtin::Triv => triv(bound),
    }
}

/// Terms in `μ`, `τ` and variables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Term {
    Var(usize),
    Tau(Box<Term>),
    Mu(Box<Term>, Box<Term>),
}

impl Term {
    fn vars(&self, out: &mut Vec<usize>) {
        match self {
            Term::Var(v) => out.push(*v),
            Term::Tau(t) => t.vars(out),
            Term::Mu(a, b) => {
                a.vars(out);
                b.vars(out);
            }
        }
    }

    /// One rewriting step: `ττx → x`, `τμ(x,y) → μ(τy,τx)`,
    /// `μ(μ(x,y),z) → μ(x,μ(y,z))`, innermost first.
    fn step(&self) -> Option<Term> {
        match self {
            Term::Var(_) => None,
            Term::Tau(t) => {
                if let Some(t2) = t.step() {
                    return Some(Term::Tau(Box::new(t2)));
                }
                match &**t {
                    Term::Tau(x) => Some((**x).clone()),
                    Term::Mu(x, y) => {
                        Some(Term::Mu(Box::new(Term::Tau(y.clone())), Box::new(Term::Tau(x.clone()))))
                    }
                    Term::Var(_) => None,
                }
            }
            Term::Mu(a, b) => {
                if let Some(a2) = a.step() {
                    return Some(Term::Mu(Box::new(a2), b.clone()));
                }
                if let Some(b2) = b.step() {
                    return Some(Term::Mu(a.clone(), Box::new(b2)));
                }
                match &**a {
                    Term::Mu(x, y) => Some(Term::Mu(x.clone(), Box::new(Term::Mu(y.clone(), b.clone())))),
                    _ => None,
                }
            }
        }
    }

    pub fn normal_form(&self) -> Term {
        let mut t = self.clone();
        while let Some(t2) = t.step() {
            t = t2;
        }
        t
    }
}

/// Number of distinct normal forms of multilinear terms in `n ≥ 1` variables
/// generated by `μ` and `τ` under `τ² = id`, `τμ(a,b) = μ(τb,τa)` and
/// associativity, by closing the generators under substitution.
pub fn assinv_presentation_count(n: usize) -> usize {
    let mut seen: BTreeSet<Term> = (0..n).map(Term::Var).collect();
    let mut frontier: Vec<Term> = seen.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        let current: Vec<Term> = seen.iter().cloned().collect();
        for t in &frontier {
            let mut cands = vec![Term::Tau(Box::new(t.clone()))];
            let mut tv = Vec::new();
            t.vars(&mut tv);
            for u in &current {
                let mut uv = Vec::new();
                u.vars(&mut uv);
                if uv.iter().any(|v| tv.contains(v)) {
                    continue;
                }
                cands.push(Term::Mu(Box::new(t.clone()), Box::new(u.clone())));
                cands.push(Term::Mu(Box::new(u.clone()), Box::new(t.clone())));
            }
            for c in cands {
                let c = c.normal_form();
                if seen.insert(c.clone()) {
                    next.push(c);
                }
            }
        }
        frontier = next;
    }
    seen.into_iter()
        .filter(|t| {
            let mut v = Vec::new();
            t.vars(&mut v);
            v.len() == n
        })
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let ai = builtin_operad(Builtin::AssInv, 3);
        assert_eq!((ai.count(0), ai.count(1), ai.count(2), ai.count(3)), (1, 2, 8, 48));
        let a = builtin_operad(Builtin::Ass, 3);
        assert_eq!(a.count(3), 6);
        assert_eq!(builtin_operad(Builtin::Comm, 4).count(4), 1);
        assert!(!builtin_operad(Builtin::Triv, 3).is_unital());
    }

    #[test]
    fn tau_reverses() {
        let ai = builtin_operad(Builtin::AssInv, 2);
        let tau = ai.op_by_name(1, "~a").unwrap();
        let mu = ai.op_by_name(2, "ab").unwrap();
        let t_mu = ai.compose(tau, 0, mu).unwrap();
        assert_eq!(ai.op_name(t_mu), "~b~a");
        assert_eq!(ai.compose(tau, 0, tau).unwrap(), ai.unit);
        assert!(ai.unary_is_group());
    }

    #[test]
    fn axioms_hold() {
        for b in Builtin::ALL {
            builtin_operad(b, 3).check_axioms(3).unwrap();
        }
    }

    #[test]
    fn presentation_matches_word_model() {
        let ai = builtin_operad(Builtin::AssInv, 3);
        for n in 1..=3 {
            assert_eq!(assinv_presentation_count(n), ai.count(n));
        }
    }
}
