//! Fixed-length binary strings with the coordinatewise partial order.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A bit string `a_0 a_1 ... a_{n-1}`. Coordinate 0 is printed first.
///
/// `Ord` is a total order used for sorting only; the partial order on
/// strings is [`BinaryLabel::precedes`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryLabel {
    len: usize,
    words: Vec<u64>,
}

impl BinaryLabel {
    pub fn zeros(len: usize) -> Self {
        BinaryLabel {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut l = Self::zeros(len);
        for i in 0..len {
            l.set(i, true);
        }
        l
    }

    /// Unit vector `e_i`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut l = Self::zeros(len);
        l.set(i, true);
        l
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut l = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            l.set(i, b);
        }
        l
    }

    /// Characteristic vector of `set` within `0..len`.
    pub fn from_set(len: usize, set: &[usize]) -> Self {
        let mut l = Self::zeros(len);
        for &i in set {
            l.set(i, true);
        }
        l
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, bit: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % 64);
        if bit {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn flip(&mut self, i: usize) {
        self.words[i / 64] ^= 1u64 << (i % 64);
    }

    pub fn flipped(&self, i: usize) -> Self {
        let mut l = self.clone();
        l.flip(i);
        l
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of the 1-coordinates.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len).filter(|&i| self.get(i)).collect()
    }

    pub fn hamming(&self, other: &Self) -> usize {
        assert_eq!(self.len, other.len, "labels of different length");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    /// Coordinatewise `self <= other`.
    pub fn precedes(&self, other: &Self) -> bool {
        assert_eq!(self.len, other.len, "labels of different length");
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn xor(&self, other: &Self) -> Self {
        assert_eq!(self.len, other.len, "labels of different length");
        BinaryLabel {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a ^ b)
                .collect(),
        }
    }

    /// Keeps the listed coordinates, in the given order.
    pub fn project(&self, coords: &[usize]) -> Self {
        let mut l = Self::zeros(coords.len());
        for (j, &i) in coords.iter().enumerate() {
            l.set(j, self.get(i));
        }
        l
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }
}

impl fmt::Display for BinaryLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryLabel({self})")
    }
}

impl FromStr for BinaryLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::InvalidLabels(format!(
                    "unexpected character {c:?} in {s:?}"
                ))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(BinaryLabel::from_bits(&bits))
    }
}
