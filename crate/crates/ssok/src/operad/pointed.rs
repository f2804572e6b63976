//! Pointed finite sets `⟨n⟩ = {0, …, n}` and basepoint-preserving maps.

use std::fmt;

use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointedMap {
    pub m: usize,
    pub n: usize,
    /// `f[i]` for `i ∈ ⟨m⟩`; `f[0] = 0`.
    f: Vec<usize>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub inert: bool,
    pub active: bool,
    pub semi_inert: bool,
    pub atomic: bool,
}

impl PointedMap {
    /// From the images of `1..=m`.
    pub fn new(n: usize, images: &[usize]) -> Result<Self, String> {
        if let Some(&bad) = images.iter().find(|&&j| j > n) {
            return Err(format!("image {bad} is outside ⟨{n}⟩"));
        }
        let mut f = vec![0];
        f.extend_from_slice(images);
        Ok(PointedMap { m: images.len(), n, f })
    }

    pub fn identity(n: usize) -> Self {
        PointedMap { m: n, n, f: (0..=n).collect() }
    }

    /// The unique active map `⟨m⟩ → ⟨1⟩`.
    pub fn fold(m: usize) -> Self {
        PointedMap::new(1, &vec![1; m]).unwrap()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.f[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.f[1..]
    }

    /// `self ∘ other`.
    pub fn after(&self, other: &PointedMap) -> PointedMap {
        assert_eq!(other.n, self.m, "pointed maps are not composable");
        PointedMap { m: other.m, n: self.n, f: other.f.iter().map(|&j| self.f[j]).collect() }
    }

    /// Sorted preimage of `j`.
    pub fn preimage(&self, j: usize) -> Vec<usize> {
        (0..=self.m).filter(|&i| self.f[i] == j && (i != 0 || j == 0)).collect()
    }

    pub fn is_active(&self) -> bool {
        self.f[1..].iter().all(|&j| j != 0)
    }

    pub fn is_inert(&self) -> bool {
        (1..=self.n).all(|j| self.preimage(j).len() == 1)
    }

    pub fn is_semi_inert(&self) -> bool {
        (1..=self.n).all(|j| self.preimage(j).len() <= 1)
    }

    /// Semi-inert over an injection `⟨n⟩ → ⟨n+1⟩`.
    pub fn is_atomic(&self) -> bool {
        self.n == self.m + 1 && self.is_active() && self.is_semi_inert()
    }

    pub fn is_bijection(&self) -> bool {
        self.m == self.n && self.is_active() && self.is_semi_inert()
    }

    pub fn classify(&self) -> Classification {
        Classification {
            inert: self.is_inert(),
            active: self.is_active(),
            semi_inert: self.is_semi_inert(),
            atomic: self.is_atomic(),
        }
    }

    /// For an atomic map, the one element of the target it misses.
    pub fn new_color(&self) -> Option<usize> {
        if !self.is_atomic() {
            return None;
        }
        (1..=self.n).find(|&j| self.preimage(j).is_empty())
    }

    /// Every pointed map `⟨m⟩ → ⟨n⟩` in lexicographic order of images.
    pub fn all(m: usize, n: usize) -> Vec<PointedMap> {
        let mut out = Vec::new();
        let mut img = vec![0; m];
        loop {
            out.push(PointedMap::new(n, &img).unwrap());
            let mut k = m;
            loop {
                if k == 0 {
                    return out;
                }
                k -= 1;
                if img[k] < n {
                    img[k] += 1;
                    break;
                }
                img[k] = 0;
            }
        }
    }

    pub fn all_active(m: usize, n: usize) -> Vec<PointedMap> {
        PointedMap::all(m, n).into_iter().filter(|a| a.is_active()).collect()
    }
}

impl fmt::Display for PointedMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}⟩→⟨{}⟩[", self.m, self.n)?;
        for (k, j) in self.images().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{j}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classification_examples() {
        let fold = PointedMap::fold(2);
        assert!(fold.is_active() && !fold.is_semi_inert() && !fold.is_inert());
        let collapse = PointedMap::new(1, &[0, 0]).unwrap();
        assert!(collapse.is_semi_inert() && !collapse.is_active() && !collapse.is_inert());
        for n in 0..4 {
            let inc = PointedMap::new(n + 1, &(1..=n).collect::<Vec<_>>()).unwrap();
            assert!(inc.is_atomic());
            assert_eq!(inc.new_color(), Some(n + 1));
        }
    }

    #[test]
    fn counts() {
        assert_eq!(PointedMap::all(3, 2).len(), 27);
        assert_eq!(PointedMap::all_active(3, 2).len(), 8);
        assert_eq!(PointedMap::all(2, 3).into_iter().filter(|a| a.is_atomic()).count(), 6);
        assert_eq!(PointedMap::all(2, 3).into_iter().filter(|a| a.is_inert()).count(), 0);
        assert_eq!(PointedMap::all(3, 2).into_iter().filter(|a| a.is_inert()).count(), 6);
    }
}
