//! Truncated power series in one variable `t` with exact coefficients.

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{self, SparseVec};
use crate::scalar::{Field, Scalar};
use crate::semigroup::NumericalSemigroup;

/// Least exponent with a nonzero coefficient, if any is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Valuation {
    Finite(u32),
    ZeroWithinPrecision,
}

/// A power series known below `precision`; `precision == None` marks an
/// exact polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    field: Field,
    terms: SparseVec<u32>,
    precision: Option<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Subtract,
    Multiply,
}

impl TruncatedSeries {
    pub fn zero(field: Field) -> Self {
        TruncatedSeries { field, terms: Vec::new(), precision: None }
    }

    pub fn monomial(field: Field, coeff: Scalar, exponent: u32) -> Self {
        let terms = if coeff.is_zero() { Vec::new() } else { vec![(exponent, coeff)] };
        TruncatedSeries { field, terms, precision: None }
    }

    /// Exact polynomial from `(exponent, coefficient)` pairs.
    pub fn polynomial(field: Field, terms: impl IntoIterator<Item = (u32, Scalar)>) -> Self {
        TruncatedSeries { field, terms: linalg::collect(terms), precision: None }
    }

    pub fn from_sparse(field: Field, terms: SparseVec<u32>) -> Self {
        TruncatedSeries { field, terms, precision: None }
    }

    /// Drops everything at or above `precision`.
    pub fn truncated(mut self, precision: u32) -> Self {
        self.terms.retain(|(e, _)| *e < precision);
        self.precision = Some(self.precision.map_or(precision, |p| p.min(precision)));
        self
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> &[(u32, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> SparseVec<u32> {
        self.terms
    }

    pub fn precision(&self) -> Option<u32> {
        self.precision
    }

    pub fn is_exact(&self) -> bool {
        self.precision.is_none()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn valuation(&self) -> Valuation {
        match self.terms.first() {
            Some((e, _)) => Valuation::Finite(*e),
            None => Valuation::ZeroWithinPrecision,
        }
    }

    pub fn coefficient(&self, exponent: u32) -> Option<Scalar> {
        if self.precision.is_some_and(|p| exponent >= p) {
            return None;
        }
        Some(
            self.terms
                .iter()
                .find(|(e, _)| *e == exponent)
                .map_or_else(|| self.field.zero(), |(_, c)| c.clone()),
        )
    }

    /// Fails with [`Error::NotInRing`] on the first exponent outside `S`.
    pub fn check_support(&self, semigroup: &NumericalSemigroup) -> Result<()> {
        match self.terms.iter().find(|(e, _)| !semigroup.contains(*e)) {
            Some((e, _)) => Err(Error::NotInRing(*e)),
            None => Ok(()),
        }
    }

    pub fn apply(op: SeriesOp, a: &Self, b: &Self) -> Result<Self> {
        if a.field != b.field {
            return Err(Error::FieldMismatch(a.field.to_string(), b.field.to_string()));
        }
        Ok(match op {
            SeriesOp::Add => a.add_scaled(&a.field.one(), b),
            SeriesOp::Subtract => a.add_scaled(&-a.field.one(), b),
            SeriesOp::Multiply => a.mul(b),
        })
    }

    fn add_scaled(&self, c: &Scalar, other: &Self) -> Self {
        let precision = min_precision(self.precision, other.precision);
        let mut terms = linalg::axpy(&self.terms, c, &other.terms);
        if let Some(p) = precision {
            terms.retain(|(e, _)| *e < p);
        }
        TruncatedSeries { field: self.field, terms, precision }
    }

    fn mul(&self, other: &Self) -> Self {
        // precision of the product: min(prec(a) + val(b), prec(b) + val(a))
        let horizon = |prec: Option<u32>, val: Valuation| match (prec, val) {
            (None, _) => None,
            (Some(p), Valuation::Finite(v)) => Some(p + v),
            // a zero factor known to precision p annihilates nothing below p
            (Some(p), Valuation::ZeroWithinPrecision) => Some(p),
        };
        let precision = min_precision(
            horizon(self.precision, other.valuation()),
            horizon(other.precision, self.valuation()),
        );
        let mut terms = Vec::new();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e = e1 + e2;
                if precision.is_none_or(|p| e < p) {
                    terms.push((e, c1 * c2));
                }
            }
        }
        TruncatedSeries { field: self.field, terms: linalg::collect(terms), precision }
    }

    /// `t^shift * self`, truncated below `horizon`.
    pub fn shifted(&self, shift: u32, horizon: u32) -> SparseVec<u32> {
        self.terms
            .iter()
            .filter(|(e, _)| e + shift < horizon)
            .map(|(e, c)| (e + shift, c.clone()))
            .collect()
    }
}

fn min_precision(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Writes a sparse polynomial in `t` as `c*t^e` terms.
pub fn format_poly(terms: &[(u32, Scalar)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (e, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let abs = if neg { -c } else { c.clone() };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = match e {
            0 => String::new(),
            1 => "t".into(),
            _ => format!("t^{e}"),
        };
        if mono.is_empty() {
            out.push_str(&abs.to_string());
        } else if abs.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{abs}*{mono}"));
        }
    }
    out
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", format_poly(&self.terms))?;
        if let Some(p) = self.precision {
            write!(f, " + O(t^{p})")?;
        }
        Ok(())
    }
}

/// Parses a sum of `c*t^e` terms such as `t^4 - t^5` or `3/2*t^8 + 1`.
/// Columns in errors are 1-based within `text`.
pub fn parse_element(text: &str, field: Field) -> Result<TruncatedSeries> {
    let mut p = ElemParser { chars: text.char_indices().peekable(), text, field };
    p.sum()
}

struct ElemParser<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    text: &'a str,
    field: Field,
}

impl ElemParser<'_> {
    fn err(&mut self, message: impl Into<String>) -> Error {
        let column = self.chars.peek().map_or(self.text.len(), |(i, _)| *i) + 1;
        Error::Parse { line: 1, column, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.chars.next_if(|(_, c)| c.is_whitespace()).is_some() {}
    }

    fn eat(&mut self, want: char) -> bool {
        self.skip_ws();
        self.chars.next_if(|(_, c)| *c == want).is_some()
    }

    fn number(&mut self) -> Option<i64> {
        self.skip_ws();
        let mut digits = String::new();
        while let Some((_, c)) = self.chars.next_if(|(_, c)| c.is_ascii_digit()) {
            digits.push(c);
        }
        digits.parse().ok()
    }

    fn sum(&mut self) -> Result<TruncatedSeries> {
        let mut terms = Vec::new();
        let mut sign = if self.eat('-') { -1 } else { 1 };
        loop {
            terms.push(self.term(sign)?);
            self.skip_ws();
            if self.eat('+') {
                sign = 1;
            } else if self.eat('-') {
                sign = -1;
            } else if self.chars.peek().is_none() {
                break;
            } else {
                return Err(self.err("expected `+`, `-` or end of element"));
            }
        }
        Ok(TruncatedSeries::polynomial(self.field, terms))
    }

    fn term(&mut self, sign: i64) -> Result<(u32, Scalar)> {
        self.skip_ws();
        let coeff = match self.number() {
            Some(num) => {
                let den = if self.eat('/') {
                    self.number().ok_or_else(|| self.err("expected denominator"))?
                } else {
                    1
                };
                let c = self.field.from_fraction(sign * num, den).map_err(|e| self.err(e.to_string()))?;
                if !self.eat('*') {
                    return Ok((0, c));
                }
                c
            }
            None => self.field.from_i64(sign),
        };
        if !self.eat('t') {
            return Err(self.err("expected coefficient or `t`"));
        }
        let exponent = if self.eat('^') {
            let e = self.number().ok_or_else(|| self.err("expected exponent"))?;
            u32::try_from(e).map_err(|_| self.err("exponent out of range"))?
        } else {
            1
        };
        Ok((exponent, coeff))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn poly(terms: &[(u32, i64)]) -> TruncatedSeries {
        TruncatedSeries::polynomial(Q, terms.iter().map(|&(e, c)| (e, Q.from_i64(c))))
    }

    #[test]
    fn monomial_product() {
        let p = TruncatedSeries::apply(SeriesOp::Multiply, &poly(&[(4, 1)]), &poly(&[(5, 1)])).unwrap();
        assert_eq!(p, poly(&[(9, 1)]));
    }

    #[test]
    fn binomial_square() {
        let b = poly(&[(4, 1), (5, -1)]);
        let p = TruncatedSeries::apply(SeriesOp::Multiply, &b, &b).unwrap();
        assert_eq!(p, poly(&[(8, 1), (9, -2), (10, 1)]));
    }

    #[test]
    fn additive_inverse() {
        let a = poly(&[(8, 1)]).truncated(64);
        let b = poly(&[(8, -1)]).truncated(64);
        let s = TruncatedSeries::apply(SeriesOp::Add, &a, &b).unwrap();
        assert_eq!(s.valuation(), Valuation::ZeroWithinPrecision);
        assert_eq!(s.precision(), Some(64));
    }

    #[test]
    fn valuations() {
        assert_eq!(poly(&[(8, 1), (9, -2)]).valuation(), Valuation::Finite(8));
        assert_eq!(TruncatedSeries::zero(Q).truncated(64).valuation(), Valuation::ZeroWithinPrecision);
        assert_eq!(poly(&[(15, 1)]).truncated(64).valuation(), Valuation::Finite(15));
    }

    #[test]
    fn product_precision_rule() {
        let a = poly(&[(4, 1), (5, 1)]).truncated(20);
        let b = poly(&[(8, 1)]).truncated(30);
        let p = TruncatedSeries::apply(SeriesOp::Multiply, &a, &b).unwrap();
        // min(20 + 8, 30 + 4)
        assert_eq!(p.precision(), Some(28));
        assert_eq!(p.coefficient(13), Some(Q.one()));
        assert_eq!(p.coefficient(28), None);
    }

    #[test]
    fn field_mismatch() {
        let a = poly(&[(1, 1)]);
        let b = TruncatedSeries::monomial(Field::Prime(7), Field::Prime(7).one(), 1);
        assert!(matches!(
            TruncatedSeries::apply(SeriesOp::Add, &a, &b),
            Err(Error::FieldMismatch(..))
        ));
    }

    #[test]
    fn support_check() {
        let s = NumericalSemigroup::new(&[4, 5, 6]).unwrap();
        assert!(poly(&[(4, 1), (5, -1)]).check_support(&s).is_ok());
        assert_eq!(poly(&[(4, 1), (7, 1)]).check_support(&s), Err(Error::NotInRing(7)));
    }

    #[test]
    fn formatting() {
        assert_eq!(format_poly(poly(&[(4, 1), (5, -1)]).terms()), "t^4 - t^5");
        assert_eq!(format_poly(poly(&[(0, 2), (1, 1)]).terms()), "2 + t");
    }

    #[test]
    fn parse_elements() {
        assert_eq!(parse_element("t^4 - t^5", Q).unwrap(), poly(&[(4, 1), (5, -1)]));
        assert_eq!(parse_element("2*t^9", Q).unwrap(), poly(&[(9, 2)]));
        assert_eq!(parse_element("-t + 3", Q).unwrap(), poly(&[(0, 3), (1, -1)]));
        let half = parse_element("3/2*t^4", Q).unwrap();
        assert_eq!(half.terms()[0].1, Q.from_fraction(3, 2).unwrap());
        assert!(matches!(parse_element("t^4 $", Q), Err(Error::Parse { column: 5, .. })));
        assert!(matches!(parse_element("x^2", Q), Err(Error::Parse { column: 1, .. })));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn series() -> impl Strategy<Value = TruncatedSeries> {
            (prop::collection::vec((0u32..12, -3i64..4), 0..5), 8u32..24)
                .prop_map(|(t, p)| poly(&t).truncated(p))
        }

        fn agree_below(a: &TruncatedSeries, b: &TruncatedSeries) -> bool {
            let h = a.precision().unwrap().min(b.precision().unwrap());
            (0..h).all(|e| a.coefficient(e) == b.coefficient(e))
        }

        proptest! {
            #[test]
            fn ring_axioms(a in series(), b in series(), c in series()) {
                use SeriesOp::*;
                let ab = TruncatedSeries::apply(Multiply, &a, &b).unwrap();
                let ba = TruncatedSeries::apply(Multiply, &b, &a).unwrap();
                prop_assert!(agree_below(&ab, &ba));
                let ab_c = TruncatedSeries::apply(Multiply, &ab, &c).unwrap();
                let bc = TruncatedSeries::apply(Multiply, &b, &c).unwrap();
                let a_bc = TruncatedSeries::apply(Multiply, &a, &bc).unwrap();
                prop_assert!(agree_below(&ab_c, &a_bc));
                let b_plus_c = TruncatedSeries::apply(Add, &b, &c).unwrap();
                let lhs = TruncatedSeries::apply(Multiply, &a, &b_plus_c).unwrap();
                let ac = TruncatedSeries::apply(Multiply, &a, &c).unwrap();
                let rhs = TruncatedSeries::apply(Add, &ab, &ac).unwrap();
                prop_assert!(agree_below(&lhs, &rhs));
            }

            #[test]
            fn doubled_precision_agrees(t in prop::collection::vec((0u32..12, -3i64..4), 0..5),
                                        u in prop::collection::vec((0u32..12, -3i64..4), 0..5),
                                        p in 8u32..20) {
                let lo = TruncatedSeries::apply(SeriesOp::Multiply, &poly(&t).truncated(p), &poly(&u).truncated(p)).unwrap();
                let hi = TruncatedSeries::apply(SeriesOp::Multiply, &poly(&t).truncated(2 * p), &poly(&u).truncated(2 * p)).unwrap();
                let h = lo.precision().unwrap();
                prop_assert!((0..h).all(|e| lo.coefficient(e) == hi.coefficient(e)));
            }
        }
    }
}
