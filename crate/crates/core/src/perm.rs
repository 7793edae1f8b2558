//! Permutations of `{1..n}`.
//!
//! Points are stored 0-based internally and printed 1-based. Composition
//! follows the right-to-left convention `(a * b)(x) = a(b(x))` everywhere in
//! the crate.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A bijection on `{0..degree}` stored as its image sequence.
///
/// The derived ordering is lexicographic on image sequences, which is the
/// canonical element order used by every enumeration in this crate.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Box<[u32]>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, validating bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::InvalidPerm(format!(
                    "image sequence {:?} is not a permutation",
                    images
                )));
            }
            seen[x] = true;
        }
        Ok(Perm {
            images: images.into_boxed_slice(),
        })
    }

    /// Builds a permutation of the given degree from 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                if p == 0 || p > degree {
                    return Err(Error::InvalidPerm(format!(
                        "point {p} outside 1..={degree}"
                    )));
                }
                if touched[p - 1] {
                    return Err(Error::InvalidPerm(format!(
                        "point {p} appears twice in cycle notation"
                    )));
                }
                touched[p - 1] = true;
                let next = cycle[(k + 1) % cycle.len()];
                if next == 0 || next > degree {
                    return Err(Error::InvalidPerm(format!(
                        "point {next} outside 1..={degree}"
                    )));
                }
                images[p - 1] = (next - 1) as u32;
            }
        }
        Ok(Perm {
            images: images.into_boxed_slice(),
        })
    }

    /// Parses cycle notation such as `"(1 2 3)(4 5)"`; `"()"` is the identity.
    ///
    /// When `degree` is `None` the degree is the largest point mentioned.
    pub fn parse(text: &str, degree: Option<usize>) -> Result<Self> {
        let cycles = parse_cycles(text)?;
        let max_point = cycles.iter().flatten().copied().max().unwrap_or(0);
        let degree = match degree {
            Some(d) if max_point > d => {
                return Err(Error::InvalidPerm(format!(
                    "point {max_point} exceeds degree {d}"
                )))
            }
            Some(d) => d,
            None => max_point.max(1),
        };
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Self::from_cycles(degree, &refs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    /// Image of a 0-based point.
    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.mul(other))
    }

    /// Unchecked composition for callers that already know the degrees agree.
    #[inline]
    pub(crate) fn mul(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm {
            images: inv.into_boxed_slice(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `g^-1 * self * g`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        g.inverse().mul(&self.mul(g))
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(a: &Perm, b: &Perm) -> Perm {
        a.inverse().mul(&b.inverse()).mul(&a.mul(b))
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.mul(other) == other.mul(self)
    }

    /// First point (0-based) not fixed, if any.
    pub fn first_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i as u32 != x)
            .map(|(i, _)| i)
    }

    /// Nontrivial cycles, 1-based, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }

    /// Element order (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    }
    a / gcd(a, b) * b
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (k, p) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.degree(), self)
    }
}

impl FromStr for Perm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Perm::parse(s, None)
    }
}

/// Tokenizes cycle notation into 1-based cycles. Columns in errors are 1-based.
fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let err = |column: usize, message: &str| Error::Parse {
        column,
        message: message.to_string(),
    };
    let mut cycles = Vec::new();
    let mut current: Option<Vec<usize>> = None;
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut k = 0;
    while k < chars.len() {
        let (offset, c) = chars[k];
        let column = text[..offset].chars().count() + 1;
        match c {
            c if c.is_whitespace() || c == ',' => {
                k += 1;
            }
            '(' => {
                if current.is_some() {
                    return Err(err(column, "nested '('"));
                }
                current = Some(Vec::new());
                k += 1;
            }
            ')' => match current.take() {
                None => return Err(err(column, "unmatched ')'")),
                Some(cycle) => {
                    if !cycle.is_empty() {
                        cycles.push(cycle);
                    }
                    k += 1;
                }
            },
            d if d.is_ascii_digit() => {
                let Some(cycle) = current.as_mut() else {
                    return Err(err(column, "point outside of a cycle"));
                };
                let mut value: usize = 0;
                while k < chars.len() && chars[k].1.is_ascii_digit() {
                    value = value
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(chars[k].1 as usize - '0' as usize))
                        .ok_or_else(|| err(column, "point too large"))?;
                    k += 1;
                }
                if value == 0 {
                    return Err(err(column, "points are 1-based"));
                }
                cycle.push(value);
            }
            other => return Err(err(column, &format!("unexpected character '{other}'"))),
        }
    }
    if current.is_some() {
        let column = text.chars().count() + 1;
        return Err(err(column, "unterminated cycle"));
    }
    if cycles.is_empty() && !text.contains('(') {
        return Err(err(
            1,
            "expected cycle notation such as \"(1 2 3)\" or \"()\"",
        ));
    }
    Ok(cycles)
}
