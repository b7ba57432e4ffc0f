//! Verification reports: one row per compared quantity.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::{Monomial, TruncSeries};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub check: String,
    pub monomial: String,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Report {
    pub rows: Vec<ReportRow>,
    #[serde(skip)]
    verbose: bool,
}

impl Report {
    pub fn new(verbose: bool) -> Self {
        Report {
            rows: Vec::new(),
            verbose,
        }
    }

    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().filter(|r| !r.pass)
    }

    pub fn push(
        &mut self,
        check: impl Into<String>,
        monomial: impl Into<String>,
        lhs: impl ToString,
        rhs: impl ToString,
        pass: bool,
    ) {
        self.rows.push(ReportRow {
            check: check.into(),
            monomial: monomial.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            pass,
        });
    }

    /// Equality of two values.
    pub fn check_eq<T: PartialEq + ToString>(
        &mut self,
        check: impl Into<String>,
        what: impl Into<String>,
        lhs: &T,
        rhs: &T,
    ) -> bool {
        let pass = lhs == rhs;
        self.push(check, what, lhs.to_string(), rhs.to_string(), pass);
        pass
    }

    /// Coefficientwise comparison over monomials accepted by `keep`. Mismatches always get a
    /// row; matches only in verbose mode. A closing summary row counts the coefficients.
    pub fn compare_series(
        &mut self,
        check: &str,
        lhs: &TruncSeries,
        rhs: &TruncSeries,
        keep: impl Fn(&Monomial) -> bool,
    ) -> bool {
        let analytic = lhs.caps().analytic;
        let keys: BTreeSet<&Monomial> = lhs
            .terms()
            .chain(rhs.terms())
            .map(|(m, _)| m)
            .filter(|m| keep(m))
            .collect();
        let mut ok = true;
        for m in &keys {
            let (a, b) = (lhs.coeff(m), rhs.coeff(m));
            let pass = a == b;
            ok &= pass;
            if !pass || self.verbose {
                self.push(check, m.display(analytic), a, b, pass);
            }
        }
        self.push(
            check,
            "*",
            format!("{} coefficients", keys.len()),
            if ok { "all equal" } else { "mismatch" },
            ok,
        );
        ok
    }

    pub fn extend(&mut self, other: Report) {
        self.rows.extend(other.rows);
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.rows).expect("rows serialize")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("check,monomial,lhs,rhs,pass\n");
        for r in &self.rows {
            let f = [&r.check, &r.monomial, &r.lhs, &r.rhs].map(|x| csv_field(x));
            out.push_str(&format!("{},{},{},{},{}\n", f[0], f[1], f[2], f[3], r.pass));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            out.push_str(&format!(
                "{} {} [{}] lhs={} rhs={}\n",
                if r.pass { "PASS" } else { "FAIL" },
                r.check,
                r.monomial,
                r.lhs,
                r.rhs
            ));
        }
        out
    }
}

/// Quotes a CSV field when it holds a comma, quote or newline.
pub fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Caps, GaussRat, VarId};

    #[test]
    fn comparison_reports_mismatch() {
        let caps = Caps::analytic(3, "z");
        let a = TruncSeries::var(&caps, VarId::Analytic);
        let b = a.scale(&GaussRat::from_int(2));
        let mut r = Report::new(false);
        assert!(r.compare_series("same", &a, &a, |_| true));
        assert!(!r.compare_series("diff", &a, &b, |_| true));
        assert_eq!(r.failures().count(), 2);
        assert!(r.to_json().contains("\"check\": \"diff\""));
    }
}
