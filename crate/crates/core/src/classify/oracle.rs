//! Brute-force equivalence: scan every `A`, force `B` from three values.

use crate::config;
use crate::error::Result;
use crate::field::Field;
use crate::moebius::{enumerate_pgl2, PairAction};
use crate::ratexpr::RatExpr;

use super::witness::forced_b;

/// A pair `(B, A)` with `B∘r∘A⁻¹ = r2`, found by scanning all of PGL₂.
pub fn are_equivalent(f: &Field, r: &RatExpr, r2: &RatExpr) -> Result<Option<PairAction>> {
    are_equivalent_with_limit(f, r, r2, config::DEFAULT_LIMIT)
}

pub fn are_equivalent_with_limit(f: &Field, r: &RatExpr, r2: &RatExpr, limit: u64) -> Result<Option<PairAction>> {
    if r.degree() != r2.degree() || r.is_constant() {
        return Ok(None);
    }
    for a in enumerate_pgl2(f, limit)? {
        let s = a.inverse(f).compose_right(f, r);
        if let Some(b) = forced_b(f, &s, r2) {
            return Ok(Some(PairAction::new(b, a)));
        }
    }
    Ok(None)
}
