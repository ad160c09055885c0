//! Closed forms for the total dominator chromatic number of `C_n(1,3)`
//! and `C_n(a,b)`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{reduce_to_standard, Congruence, ReductionResult};
use crate::invariants::{
    independence_number_formula, open_packing_number_formula, total_domination_number_formula,
};

fn require_six(what: &'static str, n: u32) -> Result<()> {
    if n < 6 {
        return Err(Error::OutOfRange { what, n, min: 6 });
    }
    Ok(())
}

/// `chi_d^t(C_n(1,3))` for `n >= 6`.
///
/// Cases are tried in order, so `n = 9` takes the first branch:
/// `2 ceil(n/8)` if `n = 6` or `8 <= n <= 10`; `2 ceil(n/8) + 1` if
/// `n = 1 (mod 8)` or `n = 11`; `2 ceil(n/8) + 2` otherwise.
pub fn formula_tdc(n: u32) -> Result<u32> {
    require_six("total dominator chromatic formula", n)?;
    let base = 2 * n.div_ceil(8);
    Ok(if n == 6 || (8..=10).contains(&n) {
        base
    } else if n % 8 == 1 || n == 11 {
        base + 1
    } else {
        base + 2
    })
}

/// `chi_d^t(C_n(a,b))` when `gcd(a,n) = 1` and `a^-1 b = +-3 (mod n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneralFormula {
    pub value: u32,
    pub reduction: ReductionResult,
    pub congruence: Congruence,
    /// `n = 6` is only covered by the `C_n(1,3)` statement, not the
    /// `C_n(a,b)` one, whose first case starts at 8.
    pub covered_by_standard_only: bool,
}

pub fn formula_tdc_general(n: u32, a: i64, b: i64) -> Result<GeneralFormula> {
    require_six("total dominator chromatic formula", n)?;
    let reduction = reduce_to_standard(n, a, b)?;
    let congruence = reduction
        .standard_congruence()
        .ok_or(Error::CongruenceFails {
            n,
            residue: reduction.residue,
        })?;
    Ok(GeneralFormula {
        value: formula_tdc(n)?,
        reduction,
        congruence,
        covered_by_standard_only: n == 6,
    })
}

/// `chi_d^t - gamma_t` for `C_n(1,3)` from its own case split: 0 for
/// `n = 8, 10`; 1 for `n = 9`; 3 for `n = 3 (mod 8)`, `n != 11`; 2 otherwise.
pub fn corollary_offset(n: u32) -> Result<u32> {
    require_six("corollary offset", n)?;
    Ok(match n {
        8 | 10 => 0,
        9 => 1,
        _ if n % 8 == 3 && n != 11 => 3,
        _ => 2,
    })
}

/// `corollary_offset(n) == formula_tdc(n) - gamma_t(n)`.
pub fn corollary_consistent(n: u32) -> Result<bool> {
    let chi = formula_tdc(n)?;
    let gamma = total_domination_number_formula(n)?;
    Ok(chi.checked_sub(gamma) == Some(corollary_offset(n)?))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaRow {
    pub n: u32,
    pub chi_dt: u32,
    pub gamma_t: u32,
    pub alpha: u32,
    pub rho_o: u32,
    pub corollary_offset: u32,
    pub consistent: bool,
}

/// Closed forms for a range of `n`, one row per `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct FormulaTable {
    pub rows: Vec<FormulaRow>,
}

impl FormulaTable {
    pub fn new(range: std::ops::RangeInclusive<u32>) -> Result<Self> {
        let rows = range
            .map(|n| {
                let chi_dt = formula_tdc(n)?;
                let gamma_t = total_domination_number_formula(n)?;
                let offset = corollary_offset(n)?;
                Ok(FormulaRow {
                    n,
                    chi_dt,
                    gamma_t,
                    alpha: independence_number_formula(n)?,
                    rho_o: open_packing_number_formula(n)?,
                    corollary_offset: offset,
                    consistent: chi_dt.checked_sub(gamma_t) == Some(offset),
                })
            })
            .collect::<Result<_>>()?;
        Ok(Self { rows })
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        for row in &self.rows {
            w.serialize(row).expect("in-memory csv write");
        }
        String::from_utf8(w.into_inner().expect("in-memory csv flush")).expect("csv is utf-8")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theorem_values() {
        let expected = [
            (6, 2),
            (7, 4),
            (8, 2),
            (9, 4),
            (10, 4),
            (11, 5),
            (12, 6),
            (13, 6),
            (14, 6),
            (15, 6),
            (16, 6),
            (17, 7),
            (18, 8),
            (19, 8),
        ];
        for (n, v) in expected {
            assert_eq!(formula_tdc(n), Ok(v), "n = {n}");
        }
        assert!(formula_tdc(5).is_err());
    }

    #[test]
    fn general_form() {
        let f = formula_tdc_general(7, 2, 6).unwrap();
        assert_eq!(f.value, 4);
        assert_eq!(f.reduction.a_inverse, 4);
        let f = formula_tdc_general(11, 4, 1).unwrap();
        assert_eq!(f.value, 5);
        for n in 6..40 {
            assert_eq!(
                formula_tdc_general(n, 1, 3).unwrap().value,
                formula_tdc(n).unwrap()
            );
        }
        assert!(
            formula_tdc_general(6, 1, 3)
                .unwrap()
                .covered_by_standard_only
        );
        assert!(matches!(
            formula_tdc_general(10, 1, 2),
            Err(Error::CongruenceFails { residue: 2, .. })
        ));
        assert!(matches!(
            formula_tdc_general(10, 2, 6),
            Err(Error::NotInvertible { .. })
        ));
    }

    #[test]
    fn offsets() {
        assert_eq!(corollary_offset(10), Ok(0));
        assert_eq!(corollary_offset(19), Ok(3));
        assert_eq!(corollary_offset(16), Ok(2));
        assert_eq!(corollary_offset(11), Ok(2));
        for n in 7..2000 {
            assert!(corollary_consistent(n).unwrap(), "n = {n}");
        }
        // The case split omits n = 6, where chi_d^t = gamma_t = 2.
        assert_eq!(corollary_offset(6), Ok(2));
        assert!(!corollary_consistent(6).unwrap());
    }

    #[test]
    fn sanity_band() {
        for n in 6..5000u32 {
            let v = formula_tdc(n).unwrap();
            let q = n.div_ceil(4);
            assert!(
                v >= 2.max(q.saturating_sub(1)) && v <= q + 4,
                "n = {n}: {v}"
            );
        }
    }

    #[test]
    fn table_csv() {
        let t = FormulaTable::new(6..=8).unwrap();
        let csv = t.to_csv();
        let mut lines = csv.lines();
        assert_eq!(
            lines.next(),
            Some("n,chi_dt,gamma_t,alpha,rho_o,corollary_offset,consistent")
        );
        assert_eq!(lines.next(), Some("6,2,2,3,2,2,false"));
    }
}
