use super::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};

/// ρ-matrix of the triangle on vertices {1,2,3} with edge order
/// e1={1,2}, e2={1,3}, e3={2,3}; rows are vertices, columns edges.
fn triangle_rho_rows() -> Vec<Vec<i64>> {
    vec![vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]
}

fn triangle_system(point: [i64; 3], t: i64) -> (RationalMatrix, Vec<Rat>) {
    let mut rows = triangle_rho_rows();
    rows.push(vec![1, 1, 1]); // Σλ = t
    let mut b: Vec<Rat> = point.iter().map(|&v| rat(v)).collect();
    b.push(rat(t));
    (RationalMatrix::from_int_rows(&rows), b)
}

#[test]
fn feasible_one_dimensional() {
    let a = RationalMatrix::from_int_rows(&[vec![1]]);
    let out = lp_feasible(&a, &[rat(1)]).unwrap();
    assert_eq!(out.status, LpStatus::Feasible);
    assert_eq!(out.witness.unwrap(), vec![rat(1)]);
}

#[test]
fn infeasible_negative_rhs() {
    let a = RationalMatrix::from_int_rows(&[vec![1]]);
    let out = lp_feasible(&a, &[rat(-1)]).unwrap();
    assert_eq!(out.status, LpStatus::Infeasible);
    assert!(out.objective.unwrap().is_positive());
}

#[test]
fn triangle_membership_witness() {
    // Hand oracle: λ1+λ2 = 1, λ1+λ3 = 1, λ2+λ3 = 2 forces λ = (0,1,1).
    let (a, b) = triangle_system([1, 1, 2], 2);
    let out = lp_feasible(&a, &b).unwrap();
    assert_eq!(out.status, LpStatus::Feasible);
    assert_eq!(out.witness.unwrap(), vec![rat(0), rat(1), rat(1)]);
}

#[test]
fn triangle_interior_point() {
    // Hand oracle: the 3×3 system has the unique solution λ = (1,1,1).
    let (a, b) = triangle_system([2, 2, 2], 3);
    let out = lp_max_min_coordinate(&a, &b).unwrap();
    assert_eq!(out.status, LpStatus::Optimal);
    assert_eq!(out.objective.unwrap(), rat(1));
    assert_eq!(out.witness.unwrap(), vec![rat(1), rat(1), rat(1)]);
}

#[test]
fn triangle_boundary_point() {
    // λ1 is forced to 0, so the best min-coordinate is 0.
    let (a, b) = triangle_system([1, 1, 2], 2);
    let out = lp_max_min_coordinate(&a, &b).unwrap();
    assert_eq!(out.status, LpStatus::Optimal);
    assert_eq!(out.objective.unwrap(), rat(0));
}

#[test]
fn triangle_infeasible_point() {
    // λ2 + λ3 = 0 forces both to 0, contradicting λ1 = 3 = 1.
    let (a, b) = triangle_system([3, 1, 0], 2);
    let out = lp_max_min_coordinate(&a, &b).unwrap();
    assert_eq!(out.status, LpStatus::Infeasible);
}

#[test]
fn rank_identity_and_zero() {
    let id = RationalMatrix::from_int_rows(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
    assert_eq!(rank(&id, RankMode::Exact), 3);
    assert_eq!(rank(&id, RankMode::Modular), 3);
    let z = RationalMatrix::from_int_rows(&[vec![0; 5], vec![0; 5]]);
    assert_eq!(rank(&z, RankMode::Exact), 0);
    assert_eq!(rank(&z, RankMode::Modular), 0);
}

#[test]
fn rank_bowtie_incidence() {
    // Bowtie ρ-matrix (rows = 5 vertices, cols = 6 edges in the order
    // {1,3},{2,3},{1,2},{3,4},{3,5},{4,5}) plus an all-ones row: rank 5,
    // confirming dim P = 4.
    let rows = vec![
        vec![1, 0, 1, 0, 0, 0],
        vec![0, 1, 1, 0, 0, 0],
        vec![1, 1, 0, 1, 1, 0],
        vec![0, 0, 0, 1, 0, 1],
        vec![0, 0, 0, 0, 1, 1],
        vec![1, 1, 1, 1, 1, 1],
    ];
    let m = RationalMatrix::from_int_rows(&rows);
    assert_eq!(rank(&m, RankMode::Exact), 5);
    assert_eq!(rank(&m, RankMode::Modular), 5);
}

#[test]
fn rank_handles_rational_entries() {
    let m = RationalMatrix::from_rows(vec![
        vec![ratio(1, 2), ratio(1, 3)],
        vec![ratio(3, 2), rat(1)],
    ]);
    assert_eq!(rank(&m, RankMode::Exact), 1);
    assert_eq!(rank(&m, RankMode::Modular), 1);
}

#[test]
fn modular_agrees_with_exact_on_random_sign_matrices() {
    // 1000 random ±1/0 matrices with dimensions up to 30×30.
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    for _ in 0..1000 {
        let rows = rng.gen_range(1..=30);
        let cols = rng.gen_range(1..=30);
        let entries: Vec<Vec<i64>> = (0..rows)
            .map(|_| (0..cols).map(|_| rng.gen_range(-1..=1)).collect())
            .collect();
        let m = RationalMatrix::from_int_rows(&entries);
        assert_eq!(rank(&m, RankMode::Modular), rank(&m, RankMode::Exact));
    }
}

proptest! {
    /// Feasible-by-construction systems are reported feasible and the
    /// returned witness re-substitutes exactly (checked inside the op).
    #[test]
    fn constructed_systems_are_feasible(
        entries in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 1..6), 1..5),
        x0 in proptest::collection::vec(0i64..=4, 1..6),
    ) {
        let cols = entries[0].len();
        let rows: Vec<Vec<i64>> = entries.iter().map(|r| {
            let mut r = r.clone();
            r.resize(cols, 0);
            r
        }).collect();
        let mut x = x0.clone();
        x.resize(cols, 0);
        let a = RationalMatrix::from_int_rows(&rows);
        let xr: Vec<Rat> = x.iter().map(|&v| rat(v)).collect();
        let b = a.mul_vec(&xr).unwrap();
        let out = lp_feasible(&a, &b).unwrap();
        prop_assert_eq!(out.status, LpStatus::Feasible);
    }

    /// The max-min-coordinate optimum really is the minimum coordinate of
    /// its witness.
    #[test]
    fn max_min_witness_attains_objective(
        entries in proptest::collection::vec(proptest::collection::vec(0i64..=2, 1..5), 1..4),
        x0 in proptest::collection::vec(1i64..=3, 1..5),
    ) {
        let cols = entries[0].len();
        let rows: Vec<Vec<i64>> = entries.iter().map(|r| {
            let mut r = r.clone();
            r.resize(cols, 0);
            r
        }).collect();
        let mut x = x0.clone();
        x.resize(cols, 1);
        let a = RationalMatrix::from_int_rows(&rows);
        let xr: Vec<Rat> = x.iter().map(|&v| rat(v)).collect();
        let b = a.mul_vec(&xr).unwrap();
        match lp_max_min_coordinate(&a, &b) {
            Ok(out) => {
                prop_assert_eq!(out.status, LpStatus::Optimal);
                let eps = out.objective.unwrap();
                let witness = out.witness.unwrap();
                let min = witness.iter().min().unwrap();
                prop_assert_eq!(min, &eps);
            }
            Err(ExactLaError::Unbounded) => {
                // Legal for degenerate systems (e.g. all-zero rows).
            }
            Err(e) => return Err(TestCaseError::fail(format!("unexpected error: {e}"))),
        }
    }
}
