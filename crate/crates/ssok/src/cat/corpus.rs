//! A fixed corpus of small categories.

use super::{group, ordinal, poset, CategoryBuilder, FiniteCategory};

pub fn parallel_pair() -> FiniteCategory {
    CategoryBuilder::new(&["x", "y"]).arrow("f", "x", "y").arrow("g", "x", "y").build().unwrap()
}

pub fn walking_iso() -> FiniteCategory {
    CategoryBuilder::new(&["x", "y"])
        .arrow("u", "x", "y")
        .arrow("v", "y", "x")
        .comp("v", "u", "id_x")
        .comp("u", "v", "id_y")
        .build()
        .unwrap()
}

pub fn z2() -> FiniteCategory {
    group(&["e", "t"], |a, b| a ^ b)
}

/// One object with an idempotent `p ∘ p = p`.
pub fn idempotent() -> FiniteCategory {
    CategoryBuilder::new(&["*"]).arrow("p", "*", "*").comp("p", "p", "p").build().unwrap()
}

pub fn span() -> FiniteCategory {
    CategoryBuilder::new(&["c", "a", "b"]).arrow("l", "c", "a").arrow("r", "c", "b").build().unwrap()
}

pub fn discrete(n: usize) -> FiniteCategory {
    let names: Vec<String> = (0..n).map(|i| format!("o{i}")).collect();
    poset(&names, |a, b| a == b)
}

/// The commutative square `[1] × [1]`.
pub fn square() -> FiniteCategory {
    poset(&["00", "01", "10", "11"], |a, b| (a & b) == a)
}

/// Ten categories with at most 4 objects and 12 morphisms, thin ones first.
pub fn corpus() -> Vec<(&'static str, FiniteCategory)> {
    vec![
        ("[0]", ordinal(0)),
        ("[1]", ordinal(1)),
        ("[2]", ordinal(2)),
        ("discrete3", discrete(3)),
        ("span", span()),
        ("square", square()),
        ("parallel", parallel_pair()),
        ("Z/2", z2()),
        ("iso", walking_iso()),
        ("idempotent", idempotent()),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_valid_and_small() {
        let c = corpus();
        assert_eq!(c.len(), 10);
        for (name, cat) in c {
            cat.validate().unwrap_or_else(|e| panic!("{name}: {e}"));
            assert!(cat.num_objects() <= 4 && cat.num_morphisms() <= 12, "{name}");
        }
        assert_eq!(square().num_morphisms(), 9);
    }
}
