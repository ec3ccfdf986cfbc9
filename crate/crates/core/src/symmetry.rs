//! Symmetric and pseudo-symmetric semigroups, duals, decompositions into an
//! over-semigroup and its dual, and the closed-form closure criteria for
//! `S ⊞ S*`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numset::NumericalSet;
use crate::sum::{set_sum, SumKind};

fn require_semigroup(s: &NumericalSet) -> Result<()> {
    if s.is_semigroup() {
        Ok(())
    } else {
        Err(Error::NotASemigroup(s.to_string()))
    }
}

/// `F(S)` odd and `F(S) - x ∈ S` for every gap `x`.
pub fn symmetric_by_definition(s: &NumericalSet) -> bool {
    let f = s.frobenius();
    f % 2 == 1 && s.gaps().as_slice().iter().all(|&x| s.has(f - x))
}

/// `F(S)` even and every gap `x` is `F(S)/2` or has `F(S) - x ∈ S`.
pub fn pseudo_symmetric_by_definition(s: &NumericalSet) -> bool {
    let f = s.frobenius();
    f.is_multiple_of(2)
        && s.gaps()
            .as_slice()
            .iter()
            .all(|&x| 2 * x == f || s.has(f - x))
}

/// `g(S) = (F(S) + 1) / 2`.
pub fn symmetric_by_genus(s: &NumericalSet) -> bool {
    2 * s.genus() == s.frobenius() + 1
}

/// `g(S) = (F(S) + 2) / 2`.
pub fn pseudo_symmetric_by_genus(s: &NumericalSet) -> bool {
    2 * s.genus() == s.frobenius() + 2
}

pub fn is_symmetric(s: &NumericalSet) -> Result<bool> {
    require_semigroup(s)?;
    let by_definition = symmetric_by_definition(s);
    debug_assert_eq!(
        by_definition,
        symmetric_by_genus(s),
        "genus criterion for {s}"
    );
    Ok(by_definition)
}

pub fn is_pseudo_symmetric(s: &NumericalSet) -> Result<bool> {
    require_semigroup(s)?;
    let by_definition = pseudo_symmetric_by_definition(s);
    debug_assert_eq!(
        by_definition,
        pseudo_symmetric_by_genus(s),
        "genus criterion for {s}"
    );
    Ok(by_definition)
}

/// `S* = {0} ∪ {F - a : a a gap, a < F} ∪ [C, ∞)`, whose diagram is the
/// transpose of the diagram of `S`. Defined for every proper numerical set.
pub fn dual(s: &NumericalSet) -> NumericalSet {
    let f = s.frobenius();
    let gaps = s.gaps();
    let gaps = gaps.as_slice();
    let small: Vec<u32> = std::iter::once(0)
        .chain(gaps[..gaps.len() - 1].iter().rev().map(|&a| f - a))
        .collect();
    NumericalSet::from_small_elements(&small, s.conductor())
        .expect("the dual of a proper numerical set is proper")
}

/// `S = T ⊞ T*` for an over-semigroup `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub summand: NumericalSet,
    pub kind: SumKind,
    pub dual_summand: NumericalSet,
}

impl Decomposition {
    fn new(summand: NumericalSet, kind: SumKind) -> Decomposition {
        let dual_summand = dual(&summand);
        Decomposition {
            summand,
            kind,
            dual_summand,
        }
    }

    /// Recomputes `T ⊞ T*`.
    pub fn recompose(&self) -> Result<NumericalSet> {
        set_sum(&self.summand, &self.dual_summand, self.kind)
    }
}

/// `{s ∈ S : s < bound} ∪ [conductor, ∞)`; `None` when that is not a proper
/// numerical set in canonical form.
fn truncate(s: &NumericalSet, bound: u32, conductor: u32) -> Option<NumericalSet> {
    let small: Vec<u32> = s
        .small_elements()
        .iter()
        .copied()
        .take_while(|&x| x < bound)
        .collect();
    NumericalSet::from_small_elements(&small, conductor).ok()
}

/// Writes a symmetric semigroup as `T ⊞E T*` (when `C(S)/2 ∈ S`) or
/// `T ⊞O T*` (otherwise), where `T` keeps the elements of `S` below `C(S)/2`.
///
/// `{0, 2, ->}` is reported as an excluded case. Formally it is
/// `{0, 2, ->} ⊞O {0, 2, ->}`, but that is just the overlap identity.
pub fn decompose_symmetric(s: &NumericalSet) -> Result<Decomposition> {
    if !is_symmetric(s)? {
        return Err(Error::NotSymmetric(s.to_string()));
    }
    if *s == NumericalSet::two() {
        return Err(Error::ExcludedCase(format!(
            "{s} is the overlap identity and is not decomposed"
        )));
    }
    let half = s.conductor() / 2;
    let (summand, kind) = if s.has(half) {
        (truncate(s, half, half), SumKind::EndToEnd)
    } else {
        (truncate(s, half, half + 1), SumKind::Overlap)
    };
    let summand = summand.ok_or_else(|| {
        Error::ExcludedCase(format!(
            "{s}: the summand would have conductor {half}, which is not a proper numerical set"
        ))
    })?;
    let d = Decomposition::new(summand, kind);
    debug_assert_eq!(d.recompose().as_ref(), Ok(s));
    Ok(d)
}

/// Writes a pseudo-symmetric semigroup as `T ⊞C T*` (when `F(S)/2 + 1 ∉ S`)
/// or `T ⊞D T*` (otherwise) with `T` not symmetric.
///
/// When the summand chosen by that case split is symmetric, the other kind
/// is tried; this happens for `{0, 3, 5, ->}`, whose case-split summand is
/// `{0, 2, ->}`. `{0, 3, ->}` admits no non-symmetric summand and is
/// reported as an excluded case.
pub fn decompose_pseudo_symmetric(s: &NumericalSet) -> Result<Decomposition> {
    if !is_pseudo_symmetric(s)? {
        return Err(Error::NotPseudoSymmetric(s.to_string()));
    }
    let half = s.frobenius() / 2;
    let conjoint = || truncate(s, half + 1, half + 1).map(|t| (t, SumKind::Conjoint));
    let discrete = || truncate(s, half, half).map(|t| (t, SumKind::Discrete));
    let (first, second) = if s.has(half + 1) {
        (discrete(), conjoint())
    } else {
        (conjoint(), discrete())
    };
    for (summand, kind) in first.into_iter().chain(second) {
        if summand.is_semigroup() && !is_symmetric(&summand)? {
            let d = Decomposition::new(summand, kind);
            if d.recompose().as_ref() == Ok(s) {
                return Ok(d);
            }
        }
    }
    Err(Error::ExcludedCase(format!(
        "{s} is only a sum T ⊞ T* for symmetric T"
    )))
}

/// Closed-form test for whether `S ⊞ S*` is a numerical semigroup.
///
/// With `s_n = C(S)`, `a_m = F(S)` and `i, j, k` ranging over the small
/// elements:
/// - discrete: `s_n` is a minimal generator and `2s_n - s_i - s_j ≠ s_k`;
/// - end-to-end: `2s_n - s_i - s_j - 1 ≠ s_k`;
/// - conjoint: `s_n` is a minimal generator and `2a_m - s_i - s_j ≠ s_k`;
/// - overlap: `2a_m - s_i - s_j - 1 ≠ s_k`.
///
/// The conjoint clause about `s_n` is stricter than needed: for
/// `S = {0, 3, 6, ->}` it reports `false`, yet `S ⊞C S*` is a semigroup.
pub fn dual_sum_is_semigroup(s: &NumericalSet, kind: SumKind) -> Result<bool> {
    require_semigroup(s)?;
    let sn = s.conductor() as i64;
    let am = s.frobenius() as i64;
    let target = match kind {
        SumKind::Discrete => 2 * sn,
        SumKind::EndToEnd => 2 * sn - 1,
        SumKind::Conjoint => 2 * am,
        SumKind::Overlap => 2 * am - 1,
    };
    let needs_minimal_conductor = matches!(kind, SumKind::Discrete | SumKind::Conjoint);
    if needs_minimal_conductor && !s.conductor_is_minimal_generator()? {
        return Ok(false);
    }
    let small = s.small_elements();
    let hits_small = |x: i64| x >= 0 && x < sn && s.has(x as u32);
    for (i, &si) in small.iter().enumerate() {
        for &sj in &small[i..] {
            if hits_small(target - si as i64 - sj as i64) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Ring-theoretic label of the semigroup ring `k[[S]]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingLabel {
    Gorenstein,
    Kunz,
    Neither,
}

impl fmt::Display for RingLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RingLabel::Gorenstein => "Gorenstein",
            RingLabel::Kunz => "Kunz",
            RingLabel::Neither => "neither",
        })
    }
}

pub fn classify_ring(s: &NumericalSet) -> Result<RingLabel> {
    Ok(if is_symmetric(s)? {
        RingLabel::Gorenstein
    } else if is_pseudo_symmetric(s)? {
        RingLabel::Kunz
    } else {
        RingLabel::Neither
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(text: &str) -> NumericalSet {
        text.parse().unwrap()
    }

    #[test]
    fn symmetric_examples() {
        assert!(is_symmetric(&NumericalSet::two()).unwrap());
        assert!(is_symmetric(&set("0 3 5 6 8 ->")).unwrap());
        assert!(!is_symmetric(&set("0 4 8 9 11 12 13 15 ->")).unwrap());
        assert!(matches!(
            is_symmetric(&set("0 2 3 6 8 9 11 ->")),
            Err(Error::NotASemigroup(_))
        ));
    }

    #[test]
    fn pseudo_symmetric_examples() {
        assert!(is_pseudo_symmetric(&set("0 3 ->")).unwrap());
        assert!(is_pseudo_symmetric(&set("0 6 7 11 12 13 14 15 17 ->")).unwrap());
        assert!(!is_pseudo_symmetric(&NumericalSet::two()).unwrap());
        assert!(is_pseudo_symmetric(&set("0 4 8 9 11 12 13 15 ->")).unwrap());
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual(&set("0 4 7 ->")), set("0 1 3 4 5 7 ->"));
        assert_eq!(dual(&set("0 3 5 6 8 ->")), set("0 3 5 6 8 ->"));
        assert_eq!(dual(&set("0 6 7 9 ->")), set("0 3 4 5 6 7 9 ->"));
        // defined for sets that are not semigroups too
        let s = set("0 2 3 6 8 9 11 ->");
        assert_eq!(dual(&dual(&s)), s);
        assert_eq!(dual(&s).frobenius(), s.frobenius());
    }

    #[test]
    fn decompose_symmetric_examples() {
        let d = decompose_symmetric(&set("0 4 7 8 10 11 12 14 ->")).unwrap();
        assert_eq!(
            (d.summand.clone(), d.kind),
            (set("0 4 7 ->"), SumKind::EndToEnd)
        );
        assert_eq!(d.dual_summand, set("0 1 3 4 5 7 ->"));

        let s = set("0 5 8 10 13 15 16 18 20 21 23 24 25 26 28 ->");
        let d = decompose_symmetric(&s).unwrap();
        assert_eq!(
            (d.summand.clone(), d.kind),
            (set("0 5 8 10 13 15 ->"), SumKind::Overlap)
        );
        assert_eq!(d.dual_summand, set("0 2 3 5 7 8 10 11 12 13 15 ->"));
        assert_eq!(d.recompose().unwrap(), s);

        assert!(matches!(
            decompose_symmetric(&NumericalSet::two()),
            Err(Error::ExcludedCase(_))
        ));
        assert!(matches!(
            decompose_symmetric(&set("0 4 7 ->")),
            Err(Error::NotSymmetric(_))
        ));
    }

    #[test]
    fn decompose_pseudo_symmetric_examples() {
        let d = decompose_pseudo_symmetric(&set("0 6 7 11 12 13 14 15 17 ->")).unwrap();
        assert_eq!(
            (d.summand.clone(), d.kind),
            (set("0 6 7 9 ->"), SumKind::Conjoint)
        );
        assert_eq!(d.dual_summand, set("0 3 4 5 6 7 9 ->"));

        let d = decompose_pseudo_symmetric(&set("0 4 8 9 11 12 13 15 ->")).unwrap();
        assert_eq!(
            (d.summand.clone(), d.kind),
            (set("0 4 7 ->"), SumKind::Discrete)
        );

        assert!(matches!(
            decompose_pseudo_symmetric(&set("0 3 ->")),
            Err(Error::ExcludedCase(_))
        ));
        assert!(matches!(
            decompose_pseudo_symmetric(&NumericalSet::two()),
            Err(Error::NotPseudoSymmetric(_))
        ));
    }

    #[test]
    fn decompose_pseudo_symmetric_falls_back_when_summand_is_symmetric() {
        let s = set("0 3 5 ->");
        // {0,2,->} ⊞D {0,2,->} = {0,3,5,->}, but {0,2,->} is symmetric
        assert_eq!(
            set_sum(
                &NumericalSet::two(),
                &NumericalSet::two(),
                SumKind::Discrete
            )
            .unwrap(),
            s
        );
        let d = decompose_pseudo_symmetric(&s).unwrap();
        assert_eq!(
            (d.summand.clone(), d.kind),
            (set("0 3 ->"), SumKind::Conjoint)
        );
        assert!(!is_symmetric(&d.summand).unwrap());
        assert_eq!(d.recompose().unwrap(), s);
    }

    #[test]
    fn dual_sum_criterion_examples() {
        let s = set("0 3 5 6 8 ->");
        for kind in SumKind::ALL {
            assert!(!dual_sum_is_semigroup(&s, kind).unwrap(), "{kind}");
            assert!(!set_sum(&s, &dual(&s), kind).unwrap().is_semigroup());
        }
        assert!(dual_sum_is_semigroup(&set("0 4 7 ->"), SumKind::EndToEnd).unwrap());
        assert!(dual_sum_is_semigroup(&NumericalSet::two(), SumKind::Overlap).unwrap());
    }

    #[test]
    fn conjoint_criterion_disagrees_with_brute_force_on_0_3_6() {
        let s = set("0 3 6 ->");
        let sum = set_sum(&s, &dual(&s), SumKind::Conjoint).unwrap();
        assert_eq!(sum, set("0 3 6 8 9 11 ->"));
        assert!(sum.is_semigroup());
        assert!(!dual_sum_is_semigroup(&s, SumKind::Conjoint).unwrap());
    }

    #[test]
    fn classify_ring_examples() {
        assert_eq!(
            classify_ring(&NumericalSet::two()).unwrap(),
            RingLabel::Gorenstein
        );
        assert_eq!(
            classify_ring(&set("0 4 8 9 11 12 13 15 ->")).unwrap(),
            RingLabel::Kunz
        );
        let s = set("0 4 6 8 9 10 12 ->");
        assert_eq!(s.gaps().as_slice(), &[1, 2, 3, 5, 7, 11]);
        assert_eq!(classify_ring(&s).unwrap(), RingLabel::Gorenstein);
        assert_eq!(classify_ring(&set("0 4 7 ->")).unwrap(), RingLabel::Neither);
    }
}
