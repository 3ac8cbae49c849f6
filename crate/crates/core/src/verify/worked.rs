use serde_json::json;

use super::report::{Cell, VerifyReport};
use crate::closed_form::phi_odd_closed_form;
use crate::lfunc::eval_closed_form;
use crate::quad::quad_c_constant;
use crate::reference::{
    c1_closed_form, c2_closed_form, C1_DECIMAL, C2_DECIMAL, LOG_EXAMPLES, PHI_ODD_EXAMPLES, SINH_OVER_Z_EXAMPLES,
};

/// The 25 worked closed forms and the 8 odd-argument tables (exact
/// equality), then C₁ and C₂ by closed form and by quadrature against the
/// printed 19 decimals.
pub fn reproduce_worked_examples() -> VerifyReport {
    let mut cells = Vec::new();
    for ex in LOG_EXAMPLES.iter().chain(SINH_OVER_Z_EXAMPLES) {
        let want = ex.expected();
        let params = [("integral", json!(ex.spec.to_string()))];
        cells.push(match ex.spec.closed_form() {
            Ok(got) => Cell::new(&params, &want, &got, got == want),
            Err(e) => Cell::new(&params, &want, e, false),
        });
    }
    for ex in PHI_ODD_EXAMPLES {
        let want = ex.expected();
        let params = [("integral", json!(format!("phi{}(s={})", ex.which, 2 * ex.n + 1)))];
        cells.push(match phi_odd_closed_form(ex.which, ex.n) {
            Ok(got) => Cell::new(&params, &want, &got, got == want),
            Err(e) => Cell::new(&params, &want, e, false),
        });
    }
    for (which, cf, printed) in [(1u8, c1_closed_form(), C1_DECIMAL), (2, c2_closed_form(), C2_DECIMAL)] {
        let closed = eval_closed_form(&cf, 30);
        let quad = quad_c_constant(which, 30).map(|r| r.value);
        for (route, v) in [("closed-form", closed), ("quadrature", quad)] {
            let params = [("constant", json!(format!("C{which}"))), ("route", json!(route))];
            cells.push(match v {
                Ok(v) => Cell::new(&params, printed, v.to_fixed_truncated(19), v.matches_printed(printed)),
                Err(e) => Cell::new(&params, printed, e, false),
            });
        }
    }
    VerifyReport::from_cells("worked-examples", cells)
}
