//! Exhaustive enumeration of numerical sets and numerical semigroups.
//!
//! Semigroups are produced two independent ways: by filtering all numerical
//! sets through [`NumericalSet::is_semigroup`], and by walking the semigroup
//! tree (the children of `S` are `S \ {g}` for the minimal generators
//! `g > F(S)`, rooted at `{0, 2, ->}`). Outputs are sorted in canonical order:
//! by Frobenius number, then by gap bitmask.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numset::NumericalSet;

/// Largest Frobenius number for exhaustive numerical-set enumeration
/// (`2^(F-1)` sets per Frobenius number).
pub const MAX_SET_FROBENIUS: u32 = 24;
pub const MAX_GENUS: u32 = 20;
pub const MAX_FROBENIUS: u32 = 40;

/// Hard enumeration caps, optionally lowered (never raised).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub genus: u32,
    pub frobenius: u32,
    pub set_frobenius: u32,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            genus: MAX_GENUS,
            frobenius: MAX_FROBENIUS,
            set_frobenius: MAX_SET_FROBENIUS,
        }
    }
}

impl Caps {
    /// Default caps, each lowered to `limit` when that is smaller.
    pub fn lowered_to(limit: u32) -> Caps {
        let d = Caps::default();
        Caps {
            genus: d.genus.min(limit),
            frobenius: d.frobenius.min(limit),
            set_frobenius: d.set_frobenius.min(limit),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BoundMode {
    #[serde(rename = "genus")]
    ByGenus,
    #[serde(rename = "frobenius")]
    ByFrobenius,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EnumBound {
    mode: BoundMode,
    limit: u32,
}

impl EnumBound {
    pub fn by_genus(limit: u32) -> Result<Self> {
        EnumBound::with_caps(BoundMode::ByGenus, limit, Caps::default())
    }

    pub fn by_frobenius(limit: u32) -> Result<Self> {
        EnumBound::with_caps(BoundMode::ByFrobenius, limit, Caps::default())
    }

    pub fn with_caps(mode: BoundMode, limit: u32, caps: Caps) -> Result<Self> {
        if limit == 0 {
            return Err(Error::MalformedInput(
                "enumeration limit must be at least 1".into(),
            ));
        }
        let cap = match mode {
            BoundMode::ByGenus => caps.genus,
            BoundMode::ByFrobenius => caps.frobenius,
        };
        if limit > cap {
            return Err(Error::BoundExceeded(format!(
                "{} limit {limit} is above the cap {cap}",
                mode.name()
            )));
        }
        Ok(EnumBound { mode, limit })
    }

    pub fn mode(&self) -> BoundMode {
        self.mode
    }

    pub fn limit(&self) -> u32 {
        self.limit
    }

    pub fn admits(&self, s: &NumericalSet) -> bool {
        match self.mode {
            BoundMode::ByGenus => s.genus() <= self.limit,
            BoundMode::ByFrobenius => s.frobenius() <= self.limit,
        }
    }

    /// Largest Frobenius number of a semigroup within the bound (a semigroup
    /// of genus `g` has `F <= 2g - 1`).
    pub fn max_semigroup_frobenius(&self) -> u32 {
        match self.mode {
            BoundMode::ByGenus => 2 * self.limit - 1,
            BoundMode::ByFrobenius => self.limit,
        }
    }
}

impl BoundMode {
    pub fn name(self) -> &'static str {
        match self {
            BoundMode::ByGenus => "genus",
            BoundMode::ByFrobenius => "frobenius",
        }
    }
}

impl fmt::Display for EnumBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} <= {}", self.mode.name(), self.limit)
    }
}

/// Every proper numerical set with `F(S) <= max_frobenius`, each exactly
/// once, in canonical order.
pub fn enumerate_numerical_sets(max_frobenius: u32) -> Result<NumericalSets> {
    enumerate_numerical_sets_capped(max_frobenius, Caps::default())
}

pub fn enumerate_numerical_sets_capped(max_frobenius: u32, caps: Caps) -> Result<NumericalSets> {
    if max_frobenius == 0 {
        return Err(Error::MalformedInput(
            "max_frobenius must be at least 1".into(),
        ));
    }
    if max_frobenius > caps.set_frobenius {
        return Err(Error::BoundExceeded(format!(
            "numerical-set enumeration is capped at F <= {}, got {max_frobenius}",
            caps.set_frobenius
        )));
    }
    Ok(NumericalSets {
        frobenius: 1,
        low_bits: 0,
        max_frobenius,
    })
}

/// Iterator over numerical sets: for each Frobenius number `F`, the
/// `2^(F-1)` subsets of `{1, ..., F-1}` joined with the gap `F`.
#[derive(Debug, Clone)]
pub struct NumericalSets {
    frobenius: u32,
    low_bits: u64,
    max_frobenius: u32,
}

impl Iterator for NumericalSets {
    type Item = NumericalSet;

    fn next(&mut self) -> Option<NumericalSet> {
        if self.frobenius > self.max_frobenius {
            return None;
        }
        let mask = self.low_bits | 1u64 << (self.frobenius - 1);
        self.low_bits += 1;
        if self.low_bits == 1u64 << (self.frobenius - 1) {
            self.low_bits = 0;
            self.frobenius += 1;
        }
        Some(NumericalSet::from_gap_mask(mask))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        if self.frobenius > self.max_frobenius {
            return (0, Some(0));
        }
        let total = (1u64 << self.max_frobenius) - 1;
        let done = (1u64 << (self.frobenius - 1)) - 1 + self.low_bits;
        let left = (total - done) as usize;
        (left, Some(left))
    }
}

/// Semigroups within `bound`, from the semigroup tree, in canonical order.
pub fn enumerate_semigroups(bound: EnumBound) -> Vec<NumericalSet> {
    semigroups_by_tree(bound)
}

/// Tree-based enumeration.
pub fn semigroups_by_tree(bound: EnumBound) -> Vec<NumericalSet> {
    let mut out = Vec::new();
    for_each_semigroup(bound, |s| out.push(s.clone()));
    out.sort_unstable();
    out
}

/// Filter-based enumeration: all numerical sets that could hold a semigroup
/// within the bound, kept when closed under addition.
pub fn semigroups_by_filter(bound: EnumBound) -> Result<Vec<NumericalSet>> {
    let max_f = bound.max_semigroup_frobenius();
    Ok(enumerate_numerical_sets(max_f)?
        .filter(|s| bound.admits(s) && s.is_semigroup())
        .collect())
}

/// Depth-first walk of the semigroup tree restricted to `bound`, in no
/// particular order. Children only grow the genus and the Frobenius number,
/// so pruning at the bound is exact.
pub fn for_each_semigroup(bound: EnumBound, mut visit: impl FnMut(&NumericalSet)) {
    let mut stack = vec![NumericalSet::two()];
    while let Some(s) = stack.pop() {
        visit(&s);
        if bound.mode() == BoundMode::ByGenus && s.genus() >= bound.limit() {
            continue;
        }
        stack.extend(children(&s, bound));
    }
}

/// `S \ {g}` for each minimal generator `g > F(S)` allowed by the bound.
fn children(s: &NumericalSet, bound: EnumBound) -> Vec<NumericalSet> {
    let c = s.conductor();
    let m = s.multiplicity();
    let top = match bound.mode() {
        BoundMode::ByFrobenius => (c + m - 1).min(bound.limit()),
        BoundMode::ByGenus => c + m - 1,
    };
    (c..=top)
        .filter(|&g| s.is_minimal_generator_unchecked(g))
        .map(|g| {
            let mut small = s.small_elements().to_vec();
            small.extend(c..g);
            NumericalSet::from_small_elements(&small, g + 1)
                .expect("removing a generator above F(S) keeps a proper set")
        })
        .collect()
}
