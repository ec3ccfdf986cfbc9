//! The four glueing sums: discrete, end-to-end, conjoint and overlap.
//!
//! On diagrams, `Z` is glued above `Y` (with `n` columns). Its rows move right
//! by `n` (discrete, end-to-end) or `n - 1` (conjoint, overlap). The discrete
//! sum also inserts a row of `n` boxes between the two, and the overlap sum
//! merges the bottom row of `Z` into the top row of `Y`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagram::YoungDiagram;
use crate::error::{Error, Result};
use crate::numset::{GapSet, NumericalSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SumKind {
    Discrete,
    EndToEnd,
    Conjoint,
    Overlap,
}

impl SumKind {
    pub const ALL: [SumKind; 4] = [
        SumKind::Discrete,
        SumKind::EndToEnd,
        SumKind::Conjoint,
        SumKind::Overlap,
    ];

    /// One-letter code used by the CLI (`D`, `E`, `C`, `O`).
    pub fn letter(self) -> char {
        match self {
            SumKind::Discrete => 'D',
            SumKind::EndToEnd => 'E',
            SumKind::Conjoint => 'C',
            SumKind::Overlap => 'O',
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            SumKind::Discrete => "discrete",
            SumKind::EndToEnd => "end-to-end",
            SumKind::Conjoint => "conjoint",
            SumKind::Overlap => "overlap",
        }
    }

    /// Column shift applied to the upper summand.
    fn overlap_columns(self) -> u32 {
        match self {
            SumKind::Discrete | SumKind::EndToEnd => 0,
            SumKind::Conjoint | SumKind::Overlap => 1,
        }
    }
}

impl fmt::Display for SumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SumKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "d" | "discrete" => Ok(SumKind::Discrete),
            "e" | "end-to-end" | "endtoend" => Ok(SumKind::EndToEnd),
            "c" | "conjoint" => Ok(SumKind::Conjoint),
            "o" | "overlap" => Ok(SumKind::Overlap),
            _ => Err(Error::MalformedInput(format!("unknown sum kind `{s}`"))),
        }
    }
}

pub fn diagram_sum(lower: &YoungDiagram, upper: &YoungDiagram, kind: SumKind) -> YoungDiagram {
    let n = lower.num_columns() as u32;
    let offset = n - kind.overlap_columns();
    let mut rows: Vec<u32> = upper.shifted_rows(offset).collect();
    match kind {
        SumKind::Discrete => {
            rows.push(n);
            rows.extend_from_slice(lower.rows());
        }
        SumKind::EndToEnd | SumKind::Conjoint => rows.extend_from_slice(lower.rows()),
        // the shifted bottom row of `upper` (length >= n) covers the top row of `lower`
        SumKind::Overlap => rows.extend_from_slice(&lower.rows()[1..]),
    }
    YoungDiagram::from_rows_unchecked(rows)
}

/// Sum of numerical sets. With `S = {0, s_1, ..., s_n, ->}` and
/// `T = {0, t_1, ..., t_m, ->}` (`s_n`, `t_m` the conductors), the nonzero
/// elements of `T` up to `t_m` are shifted by `s_n + 1`, `s_n`, `s_n - 1`
/// or `s_n - 2`. Discrete and end-to-end keep `s_n + 1` resp. `s_n` as an
/// element of the result.
pub fn set_sum(s: &NumericalSet, t: &NumericalSet, kind: SumKind) -> Result<NumericalSet> {
    let sn = s.conductor();
    let shift = match kind {
        SumKind::Discrete => sn.checked_add(1).ok_or(Error::Overflow)?,
        SumKind::EndToEnd => sn,
        SumKind::Conjoint => sn - 1,
        SumKind::Overlap => sn - 2,
    };
    let mut small = s.small_elements().to_vec();
    match kind {
        SumKind::Discrete => small.push(sn + 1),
        SumKind::EndToEnd => small.push(sn),
        SumKind::Conjoint | SumKind::Overlap => {}
    }
    for &x in &t.small_elements()[1..] {
        small.push(x.checked_add(shift).ok_or(Error::Overflow)?);
    }
    let conductor = t.conductor().checked_add(shift).ok_or(Error::Overflow)?;
    NumericalSet::from_small_elements(&small, conductor)
}

/// Gap set of `set_sum(s, t, kind)` computed from the two gap sets alone.
pub fn predicted_gaps(s: &NumericalSet, t: &NumericalSet, kind: SumKind) -> GapSet {
    let a = s.gaps().into_vec();
    let b = t.gaps().into_vec();
    let ak = *a.last().unwrap();
    let mut out = a.clone();
    match kind {
        SumKind::Discrete => {
            out.push(ak + 1);
            out.extend(b.iter().map(|&bj| ak + bj + 2));
        }
        SumKind::EndToEnd => out.extend(b.iter().map(|&bj| ak + bj + 1)),
        SumKind::Conjoint => out.extend(b.iter().map(|&bj| ak + bj)),
        SumKind::Overlap => {
            out.pop();
            out.extend(b.iter().map(|&bj| ak + bj - 1));
        }
    }
    GapSet::new(out).expect("predicted gaps are strictly increasing")
}

/// True when the conductor of the semigroup `s` is not a minimal generator;
/// in that case neither `s ⊞C s` nor `s ⊞D s` is closed under addition.
pub fn self_sum_closure_counterexample(s: &NumericalSet) -> Result<bool> {
    Ok(!s.conductor_is_minimal_generator()?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::diagram_of;

    fn set(text: &str) -> NumericalSet {
        text.parse().unwrap()
    }

    fn yd(rows: &[u32]) -> YoungDiagram {
        YoungDiagram::new(rows.to_vec()).unwrap()
    }

    #[test]
    fn diagram_sum_examples() {
        let y = yd(&[3, 2, 1]);
        let z = yd(&[3, 1, 1]);
        assert_eq!(
            diagram_sum(&y, &z, SumKind::Discrete),
            yd(&[6, 4, 4, 3, 3, 2, 1])
        );
        assert_eq!(
            diagram_sum(&y, &z, SumKind::EndToEnd),
            yd(&[6, 4, 4, 3, 2, 1])
        );
        assert_eq!(
            diagram_sum(&y, &z, SumKind::Conjoint),
            yd(&[5, 3, 3, 3, 2, 1])
        );
        assert_eq!(diagram_sum(&y, &z, SumKind::Overlap), yd(&[5, 3, 3, 2, 1]));
    }

    #[test]
    fn diagram_sum_dimensions() {
        let y = yd(&[3, 2, 1]);
        let z = yd(&[4, 1]);
        let (n, k, m, l) = (3, 3, 4, 2);
        let dims = |d: YoungDiagram| (d.num_columns(), d.num_rows());
        assert_eq!(
            dims(diagram_sum(&y, &z, SumKind::Discrete)),
            (n + m, k + l + 1)
        );
        assert_eq!(dims(diagram_sum(&y, &z, SumKind::EndToEnd)), (n + m, k + l));
        assert_eq!(
            dims(diagram_sum(&y, &z, SumKind::Conjoint)),
            (n + m - 1, k + l)
        );
        assert_eq!(
            dims(diagram_sum(&y, &z, SumKind::Overlap)),
            (n + m - 1, k + l - 1)
        );
    }

    #[test]
    fn set_sum_examples() {
        let t = set("0 4 7 ->");
        let t_dual = set("0 1 3 4 5 7 ->");
        assert_eq!(
            set_sum(&t, &t_dual, SumKind::EndToEnd).unwrap(),
            set("0 4 7 8 10 11 12 14 ->")
        );
        assert_eq!(
            set_sum(&t, &t_dual, SumKind::Discrete).unwrap(),
            set("0 4 8 9 11 12 13 15 ->")
        );
        let s = set("0 2 3 6 8 9 11 ->");
        assert_eq!(
            set_sum(&s, &NumericalSet::two(), SumKind::Overlap).unwrap(),
            s
        );
        assert_eq!(
            set_sum(&NumericalSet::two(), &s, SumKind::Overlap).unwrap(),
            s
        );
    }

    #[test]
    fn set_sum_matches_diagram_sum_on_figures() {
        let s = numerical_set_of_rows(&[3, 2, 1]);
        let t = numerical_set_of_rows(&[3, 1, 1]);
        for kind in SumKind::ALL {
            let via_sets = diagram_of(&set_sum(&s, &t, kind).unwrap());
            assert_eq!(
                via_sets,
                diagram_sum(&diagram_of(&s), &diagram_of(&t), kind),
                "{kind}"
            );
        }
    }

    fn numerical_set_of_rows(rows: &[u32]) -> NumericalSet {
        crate::diagram::numerical_set_of(&yd(rows))
    }

    #[test]
    fn predicted_gap_examples() {
        let s = set("0 3 5 6 8 ->");
        let g = predicted_gaps(&s, &s, SumKind::Conjoint);
        assert_eq!(g.as_slice(), &[1, 2, 4, 7, 8, 9, 11, 14]);
        assert_eq!(g, set_sum(&s, &s, SumKind::Conjoint).unwrap().gaps());

        let any = set("0 2 3 6 8 9 11 ->");
        assert_eq!(
            predicted_gaps(&any, &NumericalSet::two(), SumKind::Overlap),
            any.gaps()
        );

        let t = set("0 4 7 ->");
        let t_dual = set("0 1 3 4 5 7 ->");
        let g = predicted_gaps(&t, &t_dual, SumKind::EndToEnd);
        assert_eq!(g.as_slice(), &[1, 2, 3, 5, 6, 9, 13]);
        assert_eq!(g.max(), 13);
    }

    #[test]
    fn self_sum_closure_examples() {
        let s = set("0 3 5 6 8 ->");
        assert!(self_sum_closure_counterexample(&s).unwrap());
        for kind in [SumKind::Conjoint, SumKind::Discrete] {
            assert!(!set_sum(&s, &s, kind).unwrap().is_semigroup());
        }
        assert!(!self_sum_closure_counterexample(&NumericalSet::two()).unwrap());
        assert!(!self_sum_closure_counterexample(&set("0 4 7 ->")).unwrap());
        assert!(matches!(
            self_sum_closure_counterexample(&set("0 2 3 6 8 9 11 ->")),
            Err(Error::NotASemigroup(_))
        ));
    }

    #[test]
    fn kind_parsing() {
        for kind in SumKind::ALL {
            assert_eq!(kind.letter().to_string().parse::<SumKind>().unwrap(), kind);
            assert_eq!(kind.name().parse::<SumKind>().unwrap(), kind);
        }
        assert!("X".parse::<SumKind>().is_err());
    }
}
