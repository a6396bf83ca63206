use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `0..degree` in one-line notation: `images[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be positive".into()));
        }
        let mut seen = vec![false; degree];
        for &x in &images {
            if x >= degree || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "{images:?} is not a bijection on 0..{degree}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|x| x as u32).collect(),
        })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from disjoint cycles, e.g. `[[0, 1, 2]]` for `(0 1 2)`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree || touched[x] {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle {cycle:?} is not disjoint within degree {degree}"
                    )));
                }
                touched[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// Function composition `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    pub fn pow(&self, mut exp: usize) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            exp >>= 1;
        }
        acc
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
        assert!(Permutation::new(vec![]).is_err());
    }

    #[test]
    fn cycles_and_composition() {
        let a = Permutation::from_cycles(5, &[&[0, 1, 2, 3, 4]]).unwrap();
        assert_eq!(a.images(), vec![1, 2, 3, 4, 0]);
        assert!(a.pow(5).is_identity());
        assert!(!a.pow(4).is_identity());
        let t = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let c = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        // (t ∘ c)(0) = t(1) = 0
        assert_eq!(t.compose(&c).image(0), 0);
        assert!(Permutation::from_cycles(3, &[&[0, 1], &[1, 2]]).is_err());
    }
}
