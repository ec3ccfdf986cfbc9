//! Exhaustive verification of the closed-form results against brute-force
//! recomputation, over every instance inside an enumeration bound.
//!
//! Set-level statements (`prop24`, `lemma310`) range over numerical sets:
//! with a Frobenius bound, every set with `F <= limit`; with a genus bound
//! `g`, every set of genus `<= g` with `F <= 2g - 1` (the window holding all
//! semigroups of genus `<= g`). All other statements range over semigroups.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::diagram::{column_hook_set, is_semigroup_via_hooks};
use crate::enumerate::{
    enumerate_numerical_sets, enumerate_semigroups, for_each_semigroup, BoundMode, EnumBound,
};
use crate::error::{Error, Result};
use crate::numset::NumericalSet;
use crate::sum::{predicted_gaps, set_sum, SumKind};
use crate::symmetry::{
    decompose_pseudo_symmetric, decompose_symmetric, dual, dual_sum_is_semigroup,
    is_pseudo_symmetric, is_symmetric, pseudo_symmetric_by_definition, pseudo_symmetric_by_genus,
    symmetric_by_definition, symmetric_by_genus, Decomposition,
};

/// At most this many failures are serialized.
pub const MAX_SERIALIZED_FAILURES: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// Top column hooks are `F - s_i`; semigroup iff column hooks ⊆ gaps.
    Prop24,
    /// Gap sets and Frobenius numbers of the four sums.
    Lemma310,
    /// Non-minimal conductor breaks closure of `S ⊞C S` and `S ⊞D S`.
    Prop311,
    /// Genus criteria for (pseudo-)symmetry.
    Prop42,
    /// Genus of `S*` and of `S ⊞ S*`.
    Lemma44,
    /// Symmetric iff self-dual.
    Remark45,
    /// Symmetric `S = T ⊞E T*` or `T ⊞O T*` for a unique semigroup `T`.
    Thm47,
    /// Conductor of a symmetric `S ≠ {0,2,->}` is not a minimal generator.
    Lemma49,
    /// `S ⊞C S*`, `S ⊞D S*` are not semigroups for symmetric `S ≠ {0,2,->}`.
    Cor410,
    /// Pseudo-symmetric `S = T ⊞C T*` or `T ⊞D T*`, unique non-symmetric `T`.
    Thm412,
    /// Closed-form closure criteria for `S ⊞ S*`.
    Thm416,
    /// Closed `S ⊞E/O S*` are symmetric, closed `S ⊞D/C S*` pseudo-symmetric.
    Cor417,
}

impl Theorem {
    pub const ALL: [Theorem; 12] = [
        Theorem::Prop24,
        Theorem::Lemma310,
        Theorem::Prop311,
        Theorem::Prop42,
        Theorem::Lemma44,
        Theorem::Remark45,
        Theorem::Thm47,
        Theorem::Lemma49,
        Theorem::Cor410,
        Theorem::Thm412,
        Theorem::Thm416,
        Theorem::Cor417,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Prop24 => "prop24",
            Theorem::Lemma310 => "lemma310",
            Theorem::Prop311 => "prop311",
            Theorem::Prop42 => "prop42",
            Theorem::Lemma44 => "lemma44",
            Theorem::Remark45 => "remark45",
            Theorem::Thm47 => "thm47",
            Theorem::Lemma49 => "lemma49",
            Theorem::Cor410 => "cor410",
            Theorem::Thm412 => "thm412",
            Theorem::Thm416 => "thm416",
            Theorem::Cor417 => "cor417",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub input: String,
    pub kind: Option<String>,
    pub expected: String,
    pub got: String,
}

impl Failure {
    fn new(
        input: impl fmt::Display,
        kind: Option<SumKind>,
        expected: impl fmt::Display,
        got: impl fmt::Display,
    ) -> Failure {
        Failure {
            input: input.to_string(),
            kind: kind.map(|k| k.letter().to_string()),
            expected: expected.to_string(),
            got: got.to_string(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub theorem: Theorem,
    pub bound: EnumBound,
    pub instances_checked: u64,
    /// Every failure found, in enumeration order.
    pub failures: Vec<Failure>,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    theorem: &'a str,
    mode: BoundMode,
    limit: u32,
    checked: u64,
    failure_count: usize,
    failures: &'a [Failure],
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// JSON form; only the first [`MAX_SERIALIZED_FAILURES`] failures are
    /// included, `failure_count` carries the total.
    pub fn to_json(&self) -> serde_json::Value {
        let shown = self.failures.len().min(MAX_SERIALIZED_FAILURES);
        serde_json::to_value(ReportJson {
            theorem: self.theorem.name(),
            mode: self.bound.mode(),
            limit: self.bound.limit(),
            checked: self.instances_checked,
            failure_count: self.failures.len(),
            failures: &self.failures[..shown],
        })
        .expect("report serializes")
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{} over {}: {} checked, {} failure(s) -> {}",
            self.theorem,
            self.bound,
            self.instances_checked,
            self.failures.len(),
            if self.passed() { "PASS" } else { "FAIL" }
        )?;
        for fail in self.failures.iter().take(MAX_SERIALIZED_FAILURES) {
            let kind = fail
                .kind
                .as_deref()
                .map(|k| format!(" [{k}]"))
                .unwrap_or_default();
            writeln!(
                f,
                "  {}{}: expected {}, got {}",
                fail.input, kind, fail.expected, fail.got
            )?;
        }
        if self.failures.len() > MAX_SERIALIZED_FAILURES {
            writeln!(
                f,
                "  ... {} more",
                self.failures.len() - MAX_SERIALIZED_FAILURES
            )?;
        }
        Ok(())
    }
}

pub fn verify_theorem(theorem: Theorem, bound: EnumBound) -> Result<VerificationReport> {
    let (instances_checked, failures) = match theorem {
        Theorem::Prop24 => check_sets(&numerical_sets_in(bound)?, prop24),
        Theorem::Lemma310 => lemma310(&numerical_sets_in(bound)?),
        Theorem::Prop311 => check_sets(&enumerate_semigroups(bound), prop311),
        Theorem::Prop42 => check_sets(&enumerate_semigroups(bound), prop42),
        Theorem::Lemma44 => check_sets(&enumerate_semigroups(bound), lemma44),
        Theorem::Remark45 => check_sets(&enumerate_semigroups(bound), remark45),
        Theorem::Thm47 => thm47(bound),
        Theorem::Lemma49 => check_sets(&symmetric_in(bound), lemma49),
        Theorem::Cor410 => check_sets(&symmetric_in(bound), cor410),
        Theorem::Thm412 => thm412(bound),
        Theorem::Thm416 => check_kinds(&enumerate_semigroups(bound), thm416),
        Theorem::Cor417 => check_kinds(&enumerate_semigroups(bound), cor417),
    };
    Ok(VerificationReport {
        theorem,
        bound,
        instances_checked,
        failures,
    })
}

fn numerical_sets_in(bound: EnumBound) -> Result<Vec<NumericalSet>> {
    let max_f = bound.max_semigroup_frobenius();
    Ok(enumerate_numerical_sets(max_f)?
        .filter(|s| bound.admits(s))
        .collect())
}

fn symmetric_in(bound: EnumBound) -> Vec<NumericalSet> {
    enumerate_semigroups(bound)
        .into_iter()
        .filter(symmetric_by_definition)
        .collect()
}

fn check_sets(
    domain: &[NumericalSet],
    check: impl Fn(&NumericalSet) -> Vec<Failure> + Sync,
) -> (u64, Vec<Failure>) {
    let failures = domain.par_iter().flat_map_iter(&check).collect();
    (domain.len() as u64, failures)
}

fn check_kinds(
    domain: &[NumericalSet],
    check: impl Fn(&NumericalSet, SumKind) -> Option<Failure> + Sync,
) -> (u64, Vec<Failure>) {
    let failures = domain
        .par_iter()
        .flat_map_iter(|s| SumKind::ALL.into_iter().filter_map(|k| check(s, k)))
        .collect();
    ((domain.len() * SumKind::ALL.len()) as u64, failures)
}

fn sum(
    s: &NumericalSet,
    t: &NumericalSet,
    kind: SumKind,
) -> std::result::Result<NumericalSet, Failure> {
    set_sum(s, t, kind)
        .map_err(|e| Failure::new(format!("{s} ; {t}"), Some(kind), "a numerical set", e))
}

fn prop24(s: &NumericalSet) -> Vec<Failure> {
    let mut out = Vec::new();
    for (i, &si) in s.small_elements().iter().enumerate() {
        let top = column_hook_set(s, i).ok().and_then(|c| c.last().copied());
        if top != Some(s.frobenius() - si) {
            out.push(Failure::new(
                s,
                None,
                format!("top hook of column {i} = {}", s.frobenius() - si),
                format!("{top:?}"),
            ));
        }
    }
    let via_hooks = is_semigroup_via_hooks(s);
    if via_hooks != s.is_semigroup() {
        out.push(Failure::new(
            s,
            None,
            format!("semigroup = {}", s.is_semigroup()),
            via_hooks,
        ));
    }
    out
}

fn lemma310(domain: &[NumericalSet]) -> (u64, Vec<Failure>) {
    let failures = domain
        .par_iter()
        .flat_map_iter(|s| {
            domain.iter().flat_map(move |t| {
                SumKind::ALL.into_iter().filter_map(move |kind| {
                    let got = match sum(s, t, kind) {
                        Ok(x) => x,
                        Err(f) => return Some(f),
                    };
                    let predicted = predicted_gaps(s, t, kind);
                    let ak = s.frobenius() as i64;
                    let bl = t.frobenius() as i64;
                    let frob = match kind {
                        SumKind::Discrete => ak + bl + 2,
                        SumKind::EndToEnd => ak + bl + 1,
                        SumKind::Conjoint => ak + bl,
                        SumKind::Overlap => ak + bl - 1,
                    };
                    (got.gaps() != predicted || got.frobenius() as i64 != frob).then(|| {
                        Failure::new(
                            format!("{s} ; {t}"),
                            Some(kind),
                            format!("{predicted}, F = {frob}"),
                            format!("{}, F = {}", got.gaps(), got.frobenius()),
                        )
                    })
                })
            })
        })
        .collect();
    (
        (domain.len() * domain.len() * SumKind::ALL.len()) as u64,
        failures,
    )
}

fn prop311(s: &NumericalSet) -> Vec<Failure> {
    if s.conductor_is_minimal_generator().unwrap_or(true) {
        return Vec::new();
    }
    [SumKind::Conjoint, SumKind::Discrete]
        .into_iter()
        .filter_map(|kind| match sum(s, s, kind) {
            Err(f) => Some(f),
            Ok(x) if x.is_semigroup() => {
                Some(Failure::new(s, Some(kind), "S ⊞ S not a semigroup", x))
            }
            Ok(_) => None,
        })
        .collect()
}

fn prop42(s: &NumericalSet) -> Vec<Failure> {
    let mut out = Vec::new();
    if symmetric_by_definition(s) != symmetric_by_genus(s) {
        out.push(Failure::new(
            s,
            None,
            format!("symmetric = {}", symmetric_by_definition(s)),
            format!("g = (F+1)/2 is {}", symmetric_by_genus(s)),
        ));
    }
    if pseudo_symmetric_by_definition(s) != pseudo_symmetric_by_genus(s) {
        out.push(Failure::new(
            s,
            None,
            format!("pseudo-symmetric = {}", pseudo_symmetric_by_definition(s)),
            format!("g = (F+2)/2 is {}", pseudo_symmetric_by_genus(s)),
        ));
    }
    out
}

fn lemma44(s: &NumericalSet) -> Vec<Failure> {
    let mut out = Vec::new();
    let n = s.small_elements().len() as u32;
    let sn = s.conductor();
    if s.genus() != sn - n {
        out.push(Failure::new(
            s,
            None,
            format!("g(S) = {}", sn - n),
            s.genus(),
        ));
    }
    let d = dual(s);
    if d.genus() != n {
        out.push(Failure::new(s, None, format!("g(S*) = {n}"), d.genus()));
    }
    for kind in SumKind::ALL {
        let expected = match kind {
            SumKind::EndToEnd | SumKind::Conjoint => sn,
            SumKind::Overlap => sn - 1,
            SumKind::Discrete => sn + 1,
        };
        match sum(s, &d, kind) {
            Ok(x) if x.genus() == expected => {}
            Ok(x) => out.push(Failure::new(
                s,
                Some(kind),
                format!("g(S ⊞ S*) = {expected}"),
                x.genus(),
            )),
            Err(f) => out.push(f),
        }
    }
    out
}

fn remark45(s: &NumericalSet) -> Vec<Failure> {
    let sym = symmetric_by_definition(s);
    let self_dual = dual(s) == *s;
    if sym == self_dual {
        Vec::new()
    } else {
        vec![Failure::new(
            s,
            None,
            format!("self-dual = {sym}"),
            format!("self-dual = {self_dual}"),
        )]
    }
}

fn lemma49(s: &NumericalSet) -> Vec<Failure> {
    if *s == NumericalSet::two() {
        return Vec::new();
    }
    match s.conductor_is_minimal_generator() {
        Ok(false) => Vec::new(),
        other => vec![Failure::new(
            s,
            None,
            "conductor not a minimal generator",
            format!("{other:?}"),
        )],
    }
}

fn cor410(s: &NumericalSet) -> Vec<Failure> {
    if *s == NumericalSet::two() {
        return Vec::new();
    }
    let d = dual(s);
    [SumKind::Conjoint, SumKind::Discrete]
        .into_iter()
        .filter_map(|kind| match sum(s, &d, kind) {
            Err(f) => Some(f),
            Ok(x) if x.is_semigroup() => {
                Some(Failure::new(s, Some(kind), "S ⊞ S* not a semigroup", x))
            }
            Ok(_) => None,
        })
        .collect()
}

fn thm416(s: &NumericalSet, kind: SumKind) -> Option<Failure> {
    let criterion = dual_sum_is_semigroup(s, kind).ok()?;
    let brute = match sum(s, &dual(s), kind) {
        Ok(x) => x.is_semigroup(),
        Err(f) => return Some(f),
    };
    (criterion != brute).then(|| {
        Failure::new(
            s,
            Some(kind),
            format!("semigroup = {brute} (brute force)"),
            format!("criterion = {criterion}"),
        )
    })
}

fn cor417(s: &NumericalSet, kind: SumKind) -> Option<Failure> {
    if !dual_sum_is_semigroup(s, kind).ok()? {
        return None;
    }
    let x = match sum(s, &dual(s), kind) {
        Ok(x) => x,
        Err(f) => return Some(f),
    };
    let (want, ok) = match kind {
        SumKind::EndToEnd | SumKind::Overlap => ("symmetric", is_symmetric(&x).unwrap_or(false)),
        SumKind::Discrete | SumKind::Conjoint => {
            ("pseudo-symmetric", is_pseudo_symmetric(&x).unwrap_or(false))
        }
    };
    (!ok).then(|| Failure::new(s, Some(kind), format!("S ⊞ S* {want}"), x))
}

/// Every `(T, kind)` with `T` a semigroup of Frobenius number `<= max_frobenius`
/// and `T ⊞ T*` landing in `targets`.
fn candidate_index(
    targets: &HashSet<NumericalSet>,
    kinds: [SumKind; 2],
    max_frobenius: u32,
) -> HashMap<NumericalSet, Vec<(NumericalSet, SumKind)>> {
    let mut index: HashMap<NumericalSet, Vec<(NumericalSet, SumKind)>> = HashMap::new();
    let bound = EnumBound::by_frobenius(max_frobenius).expect("within caps");
    for_each_semigroup(bound, |t| {
        let d = dual(t);
        for kind in kinds {
            if let Ok(x) = set_sum(t, &d, kind) {
                if targets.contains(&x) {
                    index.entry(x).or_default().push((t.clone(), kind));
                }
            }
        }
    });
    for matches in index.values_mut() {
        matches.sort();
    }
    index
}

fn describe(matches: &[(NumericalSet, SumKind)]) -> String {
    let parts: Vec<String> = matches
        .iter()
        .map(|(t, k)| format!("T = {t} [{}]", k.letter()))
        .collect();
    format!("{} candidate(s): {}", matches.len(), parts.join("; "))
}

fn check_decomposition(
    s: &NumericalSet,
    d: &Decomposition,
    kinds: [SumKind; 2],
    symmetric_summand_allowed: bool,
) -> Vec<Failure> {
    let mut out = Vec::new();
    if !kinds.contains(&d.kind) {
        out.push(Failure::new(
            s,
            Some(d.kind),
            format!("kind in {kinds:?}"),
            d.kind,
        ));
    }
    if !d.summand.is_semigroup() {
        out.push(Failure::new(s, Some(d.kind), "T a semigroup", &d.summand));
    } else if !symmetric_summand_allowed && symmetric_by_definition(&d.summand) {
        out.push(Failure::new(s, Some(d.kind), "T not symmetric", &d.summand));
    }
    if d.dual_summand != dual(&d.summand) {
        out.push(Failure::new(
            s,
            Some(d.kind),
            dual(&d.summand),
            &d.dual_summand,
        ));
    }
    match d.recompose() {
        Ok(x) if x == *s => {}
        Ok(x) => out.push(Failure::new(s, Some(d.kind), "T ⊞ T* = S", x)),
        Err(e) => out.push(Failure::new(s, Some(d.kind), "T ⊞ T* = S", e)),
    }
    out
}

fn decomposition_search(
    domain: Vec<NumericalSet>,
    kinds: [SumKind; 2],
    excluded: &NumericalSet,
    decompose: impl Fn(&NumericalSet) -> Result<Decomposition> + Sync + Send,
    candidate_ok: impl Fn(&NumericalSet) -> bool + Sync,
    symmetric_summand_allowed: bool,
) -> (u64, Vec<Failure>) {
    let targets: HashSet<NumericalSet> = domain.iter().cloned().collect();
    // F(T ⊞ T*) >= 2 F(T) - 1 for every kind
    let max_f = domain
        .iter()
        .map(NumericalSet::frobenius)
        .max()
        .unwrap_or(1);
    let index = candidate_index(&targets, kinds, max_f.div_ceil(2));
    let failures = domain
        .par_iter()
        .flat_map_iter(|s| {
            if s == excluded {
                return match decompose(s) {
                    Err(Error::ExcludedCase(_)) => Vec::new(),
                    other => vec![Failure::new(s, None, "ExcludedCase", format!("{other:?}"))],
                };
            }
            let d = match decompose(s) {
                Ok(d) => d,
                Err(e) => return vec![Failure::new(s, None, "a decomposition", e)],
            };
            let mut out = check_decomposition(s, &d, kinds, symmetric_summand_allowed);
            let matches: Vec<(NumericalSet, SumKind)> = index
                .get(s)
                .map(|v| v.iter().filter(|(t, _)| candidate_ok(t)).cloned().collect())
                .unwrap_or_default();
            if matches.len() != 1 || matches[0] != (d.summand.clone(), d.kind) {
                out.push(Failure::new(
                    s,
                    None,
                    format!("unique T = {} [{}]", d.summand, d.kind.letter()),
                    describe(&matches),
                ));
            }
            out
        })
        .collect();
    (domain.len() as u64, failures)
}

fn thm47(bound: EnumBound) -> (u64, Vec<Failure>) {
    decomposition_search(
        symmetric_in(bound),
        [SumKind::EndToEnd, SumKind::Overlap],
        &NumericalSet::two(),
        decompose_symmetric,
        |_| true,
        true,
    )
}

fn thm412(bound: EnumBound) -> (u64, Vec<Failure>) {
    let domain = enumerate_semigroups(bound)
        .into_iter()
        .filter(pseudo_symmetric_by_definition)
        .collect();
    let excluded: NumericalSet = "0 3 ->".parse().expect("literal");
    decomposition_search(
        domain,
        [SumKind::Conjoint, SumKind::Discrete],
        &excluded,
        decompose_pseudo_symmetric,
        |t| !symmetric_by_definition(t),
        false,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_names_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(t.name().parse::<Theorem>().unwrap(), t);
        }
        assert!(matches!(
            "thm99".parse::<Theorem>(),
            Err(Error::UnknownTheorem(_))
        ));
    }

    #[test]
    fn remark45_genus_one() {
        let r = verify_theorem(Theorem::Remark45, EnumBound::by_genus(1).unwrap()).unwrap();
        assert_eq!(r.instances_checked, 1);
        assert!(r.passed());
    }

    #[test]
    fn passing_statements_at_small_bounds() {
        let b = EnumBound::by_genus(8).unwrap();
        for t in [
            Theorem::Prop24,
            Theorem::Prop311,
            Theorem::Prop42,
            Theorem::Lemma44,
            Theorem::Remark45,
            Theorem::Lemma49,
            Theorem::Cor410,
            Theorem::Cor417,
        ] {
            let r = verify_theorem(t, b).unwrap();
            assert!(r.passed(), "{r}");
            assert!(r.instances_checked > 0);
        }
        let r = verify_theorem(Theorem::Lemma310, EnumBound::by_frobenius(5).unwrap()).unwrap();
        assert_eq!(r.instances_checked, 31 * 31 * 4);
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn set_domain_rejects_large_bounds() {
        let b = EnumBound::by_frobenius(30).unwrap();
        assert!(matches!(
            verify_theorem(Theorem::Prop24, b),
            Err(Error::BoundExceeded(_))
        ));
    }

    #[test]
    fn report_json_shape() {
        let r = VerificationReport {
            theorem: Theorem::Thm416,
            bound: EnumBound::by_genus(3).unwrap(),
            instances_checked: 7,
            failures: (0..150)
                .map(|i| Failure::new(i, Some(SumKind::Conjoint), "a", "b"))
                .collect(),
        };
        let v = r.to_json();
        assert_eq!(v["theorem"], "thm416");
        assert_eq!(v["mode"], "genus");
        assert_eq!(v["limit"], 3);
        assert_eq!(v["checked"], 7);
        assert_eq!(v["failure_count"], 150);
        assert_eq!(
            v["failures"].as_array().unwrap().len(),
            MAX_SERIALIZED_FAILURES
        );
        assert_eq!(v["failures"][0]["kind"], "C");
    }
}
