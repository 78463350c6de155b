//! Labelings: one F2 label per vertex, packed into a `u64` with vertex 0 in
//! the least significant bit.

use std::fmt;

use crate::error::{Error, Result};

/// A vector of F2 labels, one per vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Labeling {
    bits: u64,
    len: usize,
}

impl Labeling {
    pub const MAX_LEN: usize = 64;

    pub fn new(bits: u64, len: usize) -> Self {
        assert!(len <= Self::MAX_LEN, "labeling length {len} exceeds 64");
        let mask = low_mask(len);
        Self {
            bits: bits & mask,
            len,
        }
    }

    pub fn zeros(len: usize) -> Self {
        Self::new(0, len)
    }

    pub fn ones(len: usize) -> Self {
        Self::new(u64::MAX, len)
    }

    /// Builds a labeling from vertex indices carrying a 1.
    pub fn from_ones(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut bits = 0;
        for i in ones {
            assert!(i < len, "vertex {i} out of range {len}");
            bits |= 1u64 << i;
        }
        Self::new(bits, len)
    }

    /// Parses a string of `0`/`1` characters, vertex 0 first. Whitespace,
    /// `-`, `;`, `,` and `|` are ignored as separators.
    pub fn parse(s: &str) -> Result<Self> {
        let mut bits = 0u64;
        let mut len = 0usize;
        for c in s.chars() {
            match c {
                '0' | '1' => {
                    if len == Self::MAX_LEN {
                        return Err(Error::InvalidBitstring(s.to_string()));
                    }
                    if c == '1' {
                        bits |= 1 << len;
                    }
                    len += 1;
                }
                ' ' | '-' | ';' | ',' | '|' | '_' => {}
                _ => return Err(Error::InvalidBitstring(s.to_string())),
            }
        }
        Ok(Self::new(bits, len))
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len);
        self.bits >> i & 1 == 1
    }

    pub fn with(&self, i: usize, value: bool) -> Self {
        assert!(i < self.len);
        let bits = if value {
            self.bits | 1 << i
        } else {
            self.bits & !(1 << i)
        };
        Self { bits, len: self.len }
    }

    pub fn flip(&self, i: usize) -> Self {
        assert!(i < self.len);
        Self {
            bits: self.bits ^ 1 << i,
            len: self.len,
        }
    }

    /// Number of 1 labels.
    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    /// Concatenation: `self` occupies the low indices.
    pub fn concat(&self, other: &Labeling) -> Self {
        Self::new(self.bits | other.bits << self.len, self.len + other.len)
    }

    /// Labels listed in the given vertex order.
    pub fn to_string_in_order(&self, order: &[usize]) -> String {
        order
            .iter()
            .map(|&i| if self.get(i) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

pub(crate) fn low_mask(len: usize) -> u64 {
    if len >= 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}
