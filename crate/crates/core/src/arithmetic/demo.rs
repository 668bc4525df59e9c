use super::{ArithmeticError, ValidationError};
use crate::simplicial::{build_complex, Complex, ComplexSpec};

/// The quotient `Γ \ B` for two ramified places of degree one, as an
/// explicit complex: for `n = 2` a segment, for `n = 3` a triangle's
/// vertices and edges carrying `q + 1` triangles that share them.
pub fn multilayer_demo(n: u32, q: u64) -> Result<Complex, ArithmeticError> {
    if q < 2 {
        return Err(ArithmeticError::Invalid(vec![ValidationError::QTooSmall(
            q,
        )]));
    }
    let mut spec = ComplexSpec::default();
    match n {
        2 => {
            spec.vertex(0, Some("v0")).vertex(1, Some("v1"));
            spec.simplex(0, &[0, 1]);
        }
        3 => {
            for k in 0..3 {
                spec.vertex(k, Some(&format!("v{k}")));
            }
            spec.simplex(0, &[0, 1])
                .simplex(1, &[0, 2])
                .simplex(2, &[1, 2]);
            for layer in 0..=q {
                spec.simplex(layer, &[0, 1, 2]);
            }
        }
        _ => return Err(ArithmeticError::Unsupported(n)),
    }
    build_complex(&spec).map_err(|e| ArithmeticError::InvariantViolation(e.to_string()))
}
