//! Permutations of `{0..deg-1}` in image form, with cycle-notation parsing.

use crate::{Error, Result};
use std::fmt;

/// A permutation of the points `0..deg-1`, stored as the image table
/// `images[i] = p(i)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    /// Build from an image table, checking bijectivity.
    pub fn new(images: Vec<u16>) -> Result<Self> {
        let deg = images.len();
        let mut seen = vec![false; deg];
        for &img in &images {
            let i = img as usize;
            if i >= deg || seen[i] {
                return Err(Error::InvalidPermutation(format!(
                    "image table {images:?} is not a bijection of 0..{deg}"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(deg: usize) -> Self {
        Permutation {
            images: (0..deg as u16).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i as u16 == p)
    }

    /// `self * other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&m| self.images[m as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u16;
        }
        Permutation { images }
    }

    /// Multiplicative order.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.degree()];
        let mut ord = 1u64;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.apply(p);
                len += 1;
            }
            ord = num_integer::lcm(ord, len);
        }
        ord
    }

    /// Build from disjoint (or not) cycles on `0..deg-1`; later cycles are
    /// applied first, matching the usual product-of-cycles reading.
    pub fn from_cycles(deg: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut result = Permutation::identity(deg);
        for cycle in cycles {
            let mut images: Vec<u16> = (0..deg as u16).collect();
            for (i, &pt) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                if pt >= deg || next >= deg {
                    return Err(Error::InvalidPermutation(format!(
                        "cycle point {} out of range for degree {deg}",
                        pt.max(next)
                    )));
                }
                if images[pt] != pt as u16 && images[pt] != next as u16 {
                    return Err(Error::InvalidPermutation(format!(
                        "point {pt} repeated within a cycle"
                    )));
                }
                images[pt] = next as u16;
            }
            let cyc = Permutation::new(images)?;
            result = result.compose(&cyc);
        }
        Ok(result)
    }

    /// Parse cycle notation like `(0 1 2)(3 4)`. The empty string or `()`
    /// denotes the identity.
    pub fn parse_cycles(deg: usize, text: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest.find('(').ok_or_else(|| {
                Error::InvalidPermutation(format!("expected '(' in cycle notation: {text}"))
            })?;
            let close = rest[open..].find(')').ok_or_else(|| {
                Error::InvalidPermutation(format!("unbalanced ')' in cycle notation: {text}"))
            })? + open;
            let inner = &rest[open + 1..close];
            let points: Vec<usize> = inner
                .split([' ', ','])
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>().map_err(|_| {
                        Error::InvalidPermutation(format!("bad point '{s}' in cycle notation"))
                    })
                })
                .collect::<Result<_>>()?;
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = rest[close + 1..].trim_start();
        }
        Permutation::from_cycles(deg, &cycles)
    }

    /// Cycle decomposition, fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        let p = Permutation::parse_cycles(5, "(0 1 2)(3 4)").unwrap();
        let q = p.compose(&p.inverse());
        assert!(q.is_identity());
        assert_eq!(p.order(), 6);
    }

    #[test]
    fn parse_roundtrip() {
        let p = Permutation::parse_cycles(6, "(0 3)(1 4 2)").unwrap();
        let text = p.to_string();
        let q = Permutation::parse_cycles(6, &text).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn parse_identity() {
        assert!(Permutation::parse_cycles(4, "").unwrap().is_identity());
        assert!(Permutation::parse_cycles(4, "()").unwrap().is_identity());
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::parse_cycles(2, "(0 5)").is_err());
    }

    #[test]
    fn compose_order_is_apply_right_first() {
        // (0 1) then (1 2): point 0 -> 1 -> 2 under left-compose of (1 2) with (0 1).
        let a = Permutation::parse_cycles(3, "(0 1)").unwrap();
        let b = Permutation::parse_cycles(3, "(1 2)").unwrap();
        let ba = b.compose(&a);
        assert_eq!(ba.apply(0), 2);
    }
}
