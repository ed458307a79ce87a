use std::fmt;

use crate::parse::{parse_cycles, ParseError};

/// Permutation of {0, …, n−1}; `images[i]` is the image of i.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Perm { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return None;
            }
            seen[i] = true;
        }
        Some(Perm { images })
    }

    /// Parses 1-indexed cycle notation such as "(1,2,3)(4,5,6)".
    pub fn from_cycles(text: &str, degree: usize) -> Result<Self, ParseError> {
        Ok(Perm { images: parse_cycles(text, degree)? })
    }

    /// Builds from 0-indexed cycles.
    pub fn from_cycle_list(cycles: &[&[usize]], degree: usize) -> Self {
        let mut images: Vec<usize> = (0..degree).collect();
        for c in cycles {
            for k in 0..c.len() {
                images[c[k]] = c[(k + 1) % c.len()];
            }
        }
        Perm { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// self ∘ other: first other, then self.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn order(&self) -> usize {
        self.cycles().iter().fold(1, |acc, c| num_integer::lcm(acc, c.len()))
    }

    /// Nontrivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for s in 0..self.images.len() {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut j = self.images[s];
            while j != s {
                seen[j] = true;
                c.push(j);
                j = self.images[j];
            }
            if c.len() > 1 {
                out.push(c);
            }
        }
        out
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }
}

impl fmt::Display for Perm {
    /// 1-indexed cycle notation.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs = self.cycles();
        if cs.is_empty() {
            return f.write_str("()");
        }
        for c in cs {
            let s: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", s.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
