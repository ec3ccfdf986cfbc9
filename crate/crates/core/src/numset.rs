//! Proper numerical sets in canonical form.
//!
//! A proper numerical set `S` is stored as its small elements
//! `0 = s_0 < s_1 < ... < s_(n-1)` together with its conductor `C(S)`; every
//! integer `>= C(S)` belongs to `S` and `C(S) - 1` is always a gap. With that
//! last condition two values are equal exactly when they describe the same
//! set, so `Eq`/`Hash` can be derived from the fields.
//!
//! Text notation: `0 2 3 6 8 9 11 ->` (small elements, conductor, then the
//! literal `->`). The gap form `gaps: 1 4 5 7 10` is accepted on input.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NumericalSet {
    small: Vec<u32>,
    conductor: u32,
}

/// The gaps `G(S) = {a_1 < ... < a_k}` of a proper numerical set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GapSet(Vec<u32>);

impl GapSet {
    /// Validates a strictly increasing, nonempty list of positive integers.
    pub fn new(gaps: Vec<u32>) -> Result<Self> {
        if gaps.is_empty() {
            return Err(Error::MalformedInput("gap list is empty".into()));
        }
        if gaps[0] == 0 {
            return Err(Error::MalformedInput("0 cannot be a gap".into()));
        }
        if let Some(w) = gaps.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::MalformedInput(format!(
                "gaps must be strictly increasing ({} then {})",
                w[0], w[1]
            )));
        }
        Ok(GapSet(gaps))
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest gap, i.e. the Frobenius number.
    pub fn max(&self) -> u32 {
        *self.0.last().expect("gap sets are nonempty")
    }

    pub fn contains(&self, x: u32) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }
}

impl fmt::Display for GapSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("gaps:")?;
        for g in &self.0 {
            write!(f, " {g}")?;
        }
        Ok(())
    }
}

impl NumericalSet {
    /// Builds `{elems..., conductor, ->}`.
    ///
    /// `elems` must start at 0, be strictly increasing and stay below
    /// `conductor`; `conductor >= 2` and `conductor - 1` must not be listed.
    pub fn from_small_elements(elems: &[u32], conductor: u32) -> Result<Self> {
        match elems.first() {
            Some(0) => {}
            Some(x) => {
                return Err(Error::MalformedInput(format!(
                    "small elements must start at 0, got {x}"
                )))
            }
            None => return Err(Error::MalformedInput("no small elements given".into())),
        }
        if let Some(w) = elems.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::MalformedInput(format!(
                "small elements must be strictly increasing ({} then {})",
                w[0], w[1]
            )));
        }
        if conductor < 2 {
            return Err(Error::MalformedInput(format!(
                "conductor must be at least 2 (got {conductor}); the full set N0 is not proper"
            )));
        }
        let last = *elems.last().unwrap();
        if last >= conductor {
            return Err(Error::MalformedInput(format!(
                "small element {last} is not below the conductor {conductor}"
            )));
        }
        if last == conductor - 1 {
            return Err(Error::MalformedInput(format!(
                "{last} cannot be a small element: conductor - 1 must be a gap"
            )));
        }
        Ok(NumericalSet {
            small: elems.to_vec(),
            conductor,
        })
    }

    /// Inverse of [`NumericalSet::gaps`].
    pub fn from_gaps(gaps: &GapSet) -> Self {
        let conductor = gaps.max() + 1;
        let mut small = Vec::with_capacity(conductor as usize - gaps.len());
        let mut it = gaps.as_slice().iter().peekable();
        for x in 0..conductor {
            if it.peek() == Some(&&x) {
                it.next();
            } else {
                small.push(x);
            }
        }
        NumericalSet { small, conductor }
    }

    /// `{0, 2, ->}`, the smallest proper numerical set (and the identity of
    /// the overlap sum).
    pub fn two() -> Self {
        NumericalSet {
            small: vec![0],
            conductor: 2,
        }
    }

    /// Builds the set whose gaps are the set bits of `mask`, where bit
    /// `i - 1` stands for the integer `i`. The mask must be nonzero.
    pub(crate) fn from_gap_mask(mask: u64) -> Self {
        debug_assert!(mask != 0);
        let frobenius = 64 - mask.leading_zeros();
        let conductor = frobenius + 1;
        let small = std::iter::once(0)
            .chain((1..conductor).filter(|&x| mask >> (x - 1) & 1 == 0))
            .collect();
        NumericalSet { small, conductor }
    }

    pub fn small_elements(&self) -> &[u32] {
        &self.small
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn frobenius(&self) -> u32 {
        self.conductor - 1
    }

    pub fn genus(&self) -> u32 {
        self.conductor - self.small.len() as u32
    }

    /// Smallest nonzero element.
    pub fn multiplicity(&self) -> u32 {
        self.small.get(1).copied().unwrap_or(self.conductor)
    }

    pub fn gaps(&self) -> GapSet {
        let mut gaps = Vec::with_capacity(self.genus() as usize);
        let mut it = self.small.iter().peekable();
        for x in 0..self.conductor {
            if it.peek() == Some(&&x) {
                it.next();
            } else {
                gaps.push(x);
            }
        }
        GapSet(gaps)
    }

    /// Gap pattern as a bitmask (bit `i - 1` set iff `i` is a gap), when the
    /// Frobenius number fits in 64 bits.
    pub fn gap_mask(&self) -> Option<u64> {
        if self.frobenius() > 64 {
            return None;
        }
        Some(
            self.gaps()
                .as_slice()
                .iter()
                .fold(0u64, |m, &g| m | 1u64 << (g - 1)),
        )
    }

    pub fn contains(&self, x: i64) -> bool {
        if x < 0 {
            return false;
        }
        if x >= self.conductor as i64 {
            return true;
        }
        self.small.binary_search(&(x as u32)).is_ok()
    }

    /// Membership test for non-negative integers.
    #[inline]
    pub fn has(&self, x: u32) -> bool {
        x >= self.conductor || self.small.binary_search(&x).is_ok()
    }

    /// Membership table for `0..conductor`.
    pub(crate) fn membership(&self) -> Vec<bool> {
        let mut table = vec![false; self.conductor as usize];
        for &s in &self.small {
            table[s as usize] = true;
        }
        table
    }

    /// Closure under addition. Any sum involving an element `>= C(S)` is
    /// itself `>= C(S)`, so only pairs of small elements need checking.
    pub fn is_semigroup(&self) -> bool {
        let table = self.membership();
        let c = self.conductor;
        let nonzero = &self.small[1..];
        for (i, &a) in nonzero.iter().enumerate() {
            for &b in &nonzero[i..] {
                let sum = a + b;
                if sum >= c {
                    break;
                }
                if !table[sum as usize] {
                    return false;
                }
            }
        }
        true
    }

    /// Minimal generating set (elements of `S \ {0}` that are not the sum of
    /// two nonzero elements). Every element beyond `C(S) + m` (with `m` the
    /// multiplicity) is `m` plus an element of `S`, so the scan stops there.
    pub fn minimal_generators(&self) -> Result<Vec<u32>> {
        if !self.is_semigroup() {
            return Err(Error::NotASemigroup(self.to_string()));
        }
        let m = self.multiplicity();
        let limit = self.conductor + m;
        Ok((1..limit)
            .filter(|&s| self.has(s) && self.is_minimal_generator_unchecked(s))
            .collect())
    }

    /// Whether `s` (assumed to be a nonzero element of a semigroup) is not a
    /// sum of two nonzero elements.
    pub(crate) fn is_minimal_generator_unchecked(&self, s: u32) -> bool {
        // s = C + (s - C) with both parts in S
        if s >= 2 * self.conductor {
            return false;
        }
        // otherwise the smaller summand of s = x + y is a small element
        !self.small[1..]
            .iter()
            .take_while(|&&x| x <= s - x)
            .any(|&x| self.has(s - x))
    }

    /// Whether the conductor `s_n` is a minimal generator.
    pub fn conductor_is_minimal_generator(&self) -> Result<bool> {
        if !self.is_semigroup() {
            return Err(Error::NotASemigroup(self.to_string()));
        }
        Ok(self.is_minimal_generator_unchecked(self.conductor))
    }
}

impl Ord for NumericalSet {
    /// Canonical order: by Frobenius number, then by the gap pattern read as
    /// a binary number (bit `i - 1` for the integer `i`).
    fn cmp(&self, other: &Self) -> Ordering {
        self.frobenius().cmp(&other.frobenius()).then_with(|| {
            for p in (1..self.frobenius()).rev() {
                let a = !self.has(p);
                let b = !other.has(p);
                if a != b {
                    return a.cmp(&b);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for NumericalSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NumericalSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.small {
            write!(f, "{s} ")?;
        }
        write!(f, "{} ->", self.conductor)
    }
}

fn parse_numbers(text: &str) -> Result<Vec<u32>> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<u32>().map_err(|_| {
                Error::MalformedInput(format!("`{tok}` is not a non-negative integer"))
            })
        })
        .collect()
}

impl FromStr for NumericalSet {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if let Some(rest) = text.strip_prefix("gaps:") {
            let gaps = GapSet::new(parse_numbers(rest)?)?;
            return Ok(NumericalSet::from_gaps(&gaps));
        }
        let body = text.strip_suffix("->").ok_or_else(|| {
            Error::MalformedInput(format!(
                "expected `s0 s1 ... C ->` or `gaps: a1 a2 ...`, got `{text}`"
            ))
        })?;
        let mut nums = parse_numbers(body)?;
        let conductor = nums
            .pop()
            .ok_or_else(|| Error::MalformedInput("missing conductor before `->`".into()))?;
        NumericalSet::from_small_elements(&nums, conductor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(text: &str) -> NumericalSet {
        text.parse().unwrap()
    }

    #[test]
    fn from_small_elements_examples() {
        let s = NumericalSet::from_small_elements(&[0, 2, 3, 6, 8, 9], 11).unwrap();
        assert_eq!(s.gaps().as_slice(), &[1, 4, 5, 7, 10]);

        let s = NumericalSet::from_small_elements(&[0], 2).unwrap();
        assert_eq!(s, NumericalSet::two());

        let s = NumericalSet::from_small_elements(&[0, 3, 5, 6], 8).unwrap();
        assert_eq!((s.frobenius(), s.genus()), (7, 4));
    }

    #[test]
    fn from_small_elements_rejects_bad_data() {
        let bad: &[(&[u32], u32)] = &[
            (&[], 5),
            (&[1, 2], 5),
            (&[0, 3, 2], 5),
            (&[0, 2, 2], 5),
            (&[0], 1),
            (&[0], 0),
            (&[0, 5], 5),
            (&[0, 4], 5),
        ];
        for (elems, c) in bad {
            assert!(
                matches!(
                    NumericalSet::from_small_elements(elems, *c),
                    Err(Error::MalformedInput(_))
                ),
                "{elems:?} {c}"
            );
        }
    }

    #[test]
    fn from_gaps_examples() {
        let s = NumericalSet::from_gaps(&GapSet::new(vec![1, 4, 5, 7, 10]).unwrap());
        assert_eq!(s.small_elements(), &[0, 2, 3, 6, 8, 9]);
        assert_eq!(s.conductor(), 11);
        assert_eq!(
            NumericalSet::from_gaps(&GapSet::new(vec![1]).unwrap()),
            set("0 2 ->")
        );
        assert_eq!(
            NumericalSet::from_gaps(&GapSet::new(vec![1, 2, 4, 7]).unwrap()),
            set("0 3 5 6 8 ->")
        );
    }

    #[test]
    fn gap_set_rejects_bad_data() {
        for gaps in [vec![], vec![0, 1], vec![2, 1], vec![1, 1]] {
            assert!(matches!(GapSet::new(gaps), Err(Error::MalformedInput(_))));
        }
    }

    #[test]
    fn gaps_examples() {
        assert_eq!(
            set("0 2 3 6 8 9 11 ->").gaps().as_slice(),
            &[1, 4, 5, 7, 10]
        );
        assert_eq!(set("0 2 ->").gaps().as_slice(), &[1]);
        assert_eq!(set("0 4 7 ->").gaps().as_slice(), &[1, 2, 3, 5, 6]);
    }

    #[test]
    fn frobenius_conductor_genus() {
        let s = set("0 2 3 6 8 9 11 ->");
        assert_eq!((s.frobenius(), s.conductor(), s.genus()), (10, 11, 5));
        let s = set("0 2 ->");
        assert_eq!((s.frobenius(), s.conductor(), s.genus()), (1, 2, 1));
        let s = set("0 6 7 11 12 13 14 15 17 ->");
        assert_eq!((s.frobenius(), s.genus()), (16, 9));
    }

    #[test]
    fn contains_examples() {
        let s = set("0 2 3 6 8 9 11 ->");
        assert!(!s.contains(7));
        assert!(s.contains(0));
        assert!(!s.contains(-1));
        assert!(set("0 4 7 ->").contains(100));
    }

    #[test]
    fn is_semigroup_examples() {
        assert!(!set("0 2 3 6 8 9 11 ->").is_semigroup());
        assert!(set("0 4 7 ->").is_semigroup());
        assert!(!set("0 3 5 6 9 12 14 15 17 ->").is_semigroup());
    }

    #[test]
    fn minimal_generator_examples() {
        assert_eq!(
            set("0 4 7 ->").minimal_generators().unwrap(),
            vec![4, 7, 9, 10]
        );
        assert_eq!(set("0 2 ->").minimal_generators().unwrap(), vec![2, 3]);
        let s = set("0 3 5 6 8 ->");
        assert_eq!(s.minimal_generators().unwrap(), vec![3, 5]);
        assert!(!s.conductor_is_minimal_generator().unwrap());
        assert!(matches!(
            set("0 2 3 6 8 9 11 ->").minimal_generators(),
            Err(Error::NotASemigroup(_))
        ));
    }

    #[test]
    fn text_notation() {
        let s = set("0 2 3 6 8 9 11 ->");
        assert_eq!(s.to_string(), "0 2 3 6 8 9 11 ->");
        assert_eq!(set("gaps: 1 4 5 7 10"), s);
        assert_eq!(set("  0   2 ->  "), NumericalSet::two());
        assert_eq!(s.gaps().to_string(), "gaps: 1 4 5 7 10");
        for bad in [
            "",
            "->",
            "0 2",
            "0 x 3 ->",
            "gaps:",
            "gaps: 0 1",
            "1 3 ->",
            "0 -1 3 ->",
        ] {
            assert!(bad.parse::<NumericalSet>().is_err(), "{bad:?}");
        }
    }

    #[test]
    fn canonical_order_follows_gap_mask() {
        let a = set("0 2 ->");
        let b = set("0 1 3 ->"); // gaps {2}, mask 0b10
        let c = set("0 3 ->"); // gaps {1,2}, mask 0b11
        assert!(a < b && b < c);
        assert_eq!(b.gap_mask(), Some(0b10));
        assert_eq!(NumericalSet::from_gap_mask(0b11), c);
    }
}
