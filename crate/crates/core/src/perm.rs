//! Permutations on `0..degree`, written and parsed in 1-based cycle notation.
//!
//! Products follow the right-action convention: `a.then(b)` applies `a`
//! first, so `(a·b)(i) = b(a(i))`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<u32>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm { images: (0..degree as u32).collect() }
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen.get_mut(i as usize).ok_or_else(|| Error::BadPermutation(format!("{images:?}")))?;
            if *slot {
                return Err(Error::BadPermutation(format!("{images:?}")));
            }
            *slot = true;
        }
        Ok(Perm { images })
    }

    /// Parses cycle notation such as `(1,2,3)(4,5)`; `()` is the identity.
    /// The result acts on `degree` points, or on the largest point mentioned
    /// when `degree` is smaller.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let bad = || Error::BadPermutation(text.to_string());
        let mut cycles: Vec<Vec<u32>> = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = body.find(')').ok_or_else(bad)?;
            let inner = body[..close].trim();
            if !inner.is_empty() {
                let points = inner
                    .split(',')
                    .map(|p| p.trim().parse::<u32>().ok().filter(|&v| v > 0).map(|v| v - 1))
                    .collect::<Option<Vec<u32>>>()
                    .ok_or_else(bad)?;
                cycles.push(points);
            }
            rest = body[close + 1..].trim_start();
        }
        let max = cycles.iter().flatten().map(|&p| p as usize + 1).max().unwrap_or(0);
        let mut images: Vec<u32> = (0..degree.max(max) as u32).collect();
        let mut touched = vec![false; images.len()];
        for c in &cycles {
            for (k, &p) in c.iter().enumerate() {
                if touched[p as usize] {
                    return Err(bad());
                }
                touched[p as usize] = true;
                images[p as usize] = c[(k + 1) % c.len()];
            }
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, point: u32) -> u32 {
        self.images[point as usize]
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm { images: self.images.iter().map(|&i| other.images[i as usize]).collect() }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Pads with fixed points up to `degree`.
    pub fn extended(&self, degree: usize) -> Perm {
        let mut images = self.images.clone();
        images.extend(self.images.len() as u32..degree as u32);
        Perm { images }
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Perm::parse_cycles(s, 0)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.images.len()];
        let mut any = false;
        for start in 0..self.images.len() {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            any = true;
            write!(f, "({}", start + 1)?;
            seen[start] = true;
            let mut j = self.images[start] as usize;
            while j != start {
                write!(f, ",{}", j + 1)?;
                seen[j] = true;
                j = self.images[j] as usize;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}
