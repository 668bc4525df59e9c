use super::*;
use crate::simplicial::euler_characteristic;

fn diag_pi_first(b: &Building) -> Vec<Vec<LocalScalar>> {
    (0..b.n())
        .map(|i| {
            (0..b.n())
                .map(|j| match (i, j) {
                    (0, 0) => LocalScalar::pi_power(1),
                    _ if i == j => LocalScalar::one(),
                    _ => LocalScalar::zero(),
                })
                .collect()
        })
        .collect()
}

#[test]
fn standard_vertex_is_identity() {
    let v = standard_vertex(3, 2).unwrap();
    assert_eq!(v.exponents(), &[0, 0, 0]);
    assert_eq!(v.vertex_type(), 0);
    assert_eq!(v.entry(0, 1), Vec::<u32>::new());
    assert_eq!(
        standard_vertex(2, 4),
        Err(BuildingError::UnsupportedField(4))
    );
}

#[test]
fn diag_pi_is_type_one_neighbor() {
    let b = Building::new(3, 2, 5).unwrap();
    let v = b.canonical_form(&diag_pi_first(&b)).unwrap();
    assert_eq!(v.exponents(), &[1, 0, 0]);
    assert_eq!(v.vertex_type(), 1);
    assert!(b.neighbors(&b.standard_vertex()).unwrap().contains(&v));
}

#[test]
fn homothety_is_invisible() {
    let b = Building::new(3, 3, 6).unwrap();
    let scaled: Vec<Vec<LocalScalar>> = (0..3)
        .map(|i| {
            (0..3)
                .map(|j| {
                    if i == j {
                        LocalScalar::pi_power(1)
                    } else {
                        LocalScalar::zero()
                    }
                })
                .collect()
        })
        .collect();
    assert_eq!(b.canonical_form(&scaled).unwrap(), b.standard_vertex());
    let pi = vec![
        vec![LaurentScalar::pi_power(-2), LaurentScalar::zero()],
        vec![LaurentScalar::zero(), LaurentScalar::pi_power(-2)],
    ];
    let b2 = Building::new(2, 3, 5).unwrap();
    let v = b2.neighbors(&b2.standard_vertex()).unwrap()[1].clone();
    assert_eq!(b2.apply_gl(&pi, &v).unwrap(), v);
}

#[test]
fn singular_and_out_of_window_bases() {
    let b = Building::new(2, 2, 4).unwrap();
    let one = LocalScalar::one;
    let singular = vec![vec![one(), one()], vec![one(), one()]];
    assert_eq!(
        b.canonical_form(&singular),
        Err(BuildingError::SingularBasis)
    );
    let far = vec![
        vec![LocalScalar::pi_power(6), LocalScalar::zero()],
        vec![LocalScalar::zero(), one()],
    ];
    assert_eq!(
        b.canonical_form(&far),
        Err(BuildingError::PrecisionExceeded(4))
    );
}

#[test]
fn neighbor_counts() {
    for (n, p, expected) in [(2, 2, 3), (3, 2, 14), (3, 3, 26)] {
        let b = Building::new(n, p, n + 2).unwrap();
        let nb = b.neighbors(&b.standard_vertex()).unwrap();
        let distinct: std::collections::HashSet<_> = nb.iter().collect();
        assert_eq!(nb.len(), expected);
        assert_eq!(distinct.len(), expected);
    }
}

#[test]
fn simplex_counts_and_types() {
    for (n, p, i, expected) in [(3, 2, 2, 21), (2, 3, 1, 4), (4, 2, 1, 65)] {
        let b = Building::new(n, p, n + 2).unwrap();
        let s = b.simplices_at(&b.standard_vertex(), i).unwrap();
        assert_eq!(s.len(), expected);
        for simplex in &s {
            let types: std::collections::HashSet<_> =
                simplex.iter().map(|v| v.vertex_type()).collect();
            assert_eq!(types.len(), i + 1);
        }
    }
}

#[test]
fn small_balls() {
    let b = Building::for_radius(2, 2, 2).unwrap();
    let ball = b.ball(&b.standard_vertex(), 2).unwrap();
    assert_eq!(ball.complex().counts(), vec![10, 9]);
    assert_eq!(euler_characteristic(ball.complex()), 1.into());

    let b = Building::for_radius(3, 2, 1).unwrap();
    let ball = b.ball(&b.standard_vertex(), 1).unwrap();
    assert_eq!(ball.complex().count(0), 15);

    let ball = b.ball(&b.standard_vertex(), 0).unwrap();
    assert_eq!(ball.complex().counts(), vec![1]);
}

#[test]
fn off_center_ball_is_translate() {
    let b = Building::for_radius(2, 3, 3).unwrap();
    let v = b.neighbors(&b.standard_vertex()).unwrap()[0].clone();
    let ball = b.ball(&v, 1).unwrap();
    assert_eq!(ball.complex().counts(), vec![5, 4]);
}
