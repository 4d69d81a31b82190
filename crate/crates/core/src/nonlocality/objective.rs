//! Closed-form Svetlichny expectation at fixed Bob/Charlie settings.
//!
//! Expanding the Svetlichny operator in the correlation tensor gives
//! `tr(Sρ) = (x + x′)·λ₀ + (x − x′)·λ₁` with
//! `λ₀ = T_{z′}y + T_z y′` and `λ₁ = T_z y − T_{z′}y′`, where
//! `(T_z)_{ij} = Σ_k t_ijk z_k`. Maximizing over Alice's unit vectors leaves
//! `‖λ₀ + λ₁‖ + ‖λ₀ − λ₁‖`, attained at `x ∝ λ₀ + λ₁`, `x′ ∝ λ₀ − λ₁`.

use super::settings::{add, norm, sub, MeasurementSettings, Vec3};
use crate::qcore::CorrelationTensor;
use crate::{Error, Result};

/// Tolerance on `|direction| = 1` for public slice queries.
pub const UNIT_TOL: f64 = 1e-10;

pub type Mat3 = [[f64; 3]; 3];
pub(crate) type Cube = [[[f64; 3]; 3]; 3];

/// `T_d = Σ_k d_k T_k`, i.e. `(T_d)_{ij} = Σ_k t_ijk d_k` over `i, j, k ∈ 1..=3`.
pub fn t_slice(tensor: &CorrelationTensor, direction: Vec3) -> Result<Mat3> {
    let n = norm(direction);
    if (n - 1.0).abs() > UNIT_TOL {
        return Err(Error::NonUnitVector { norm: n });
    }
    Ok(slice(&tensor.correlation_cube(), direction))
}

pub(crate) fn slice(cube: &Cube, d: Vec3) -> Mat3 {
    let mut m = [[0.0; 3]; 3];
    for (i, row) in m.iter_mut().enumerate() {
        for (j, v) in row.iter_mut().enumerate() {
            let c = &cube[i][j];
            *v = c[0] * d[0] + c[1] * d[1] + c[2] * d[2];
        }
    }
    m
}

fn mat_vec(m: &Mat3, v: Vec3) -> Vec3 {
    [
        m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
        m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
        m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2],
    ]
}

/// `(λ₀, λ₁)` at the given settings.
pub fn lambda_vectors(tensor: &CorrelationTensor, settings: &MeasurementSettings) -> (Vec3, Vec3) {
    lambdas(&tensor.correlation_cube(), settings)
}

pub(crate) fn lambdas(cube: &Cube, s: &MeasurementSettings) -> (Vec3, Vec3) {
    let tz = slice(cube, s.z());
    let tzp = slice(cube, s.z_prime());
    let (y, yp) = (s.y(), s.y_prime());
    let l0 = add(mat_vec(&tzp, y), mat_vec(&tz, yp));
    let l1 = sub(mat_vec(&tz, y), mat_vec(&tzp, yp));
    (l0, l1)
}

pub(crate) fn objective_from_lambdas(l0: Vec3, l1: Vec3) -> f64 {
    norm(add(l0, l1)) + norm(sub(l0, l1))
}

pub(crate) fn evaluate(cube: &Cube, s: &MeasurementSettings) -> f64 {
    let (l0, l1) = lambdas(cube, s);
    objective_from_lambdas(l0, l1)
}

/// Svetlichny value maximized over Alice's settings, with Bob's and Charlie's fixed.
pub fn svetlichny_objective(tensor: &CorrelationTensor, settings: &MeasurementSettings) -> f64 {
    evaluate(&tensor.correlation_cube(), settings)
}

/// Alice's optimal directions `(x, x′)` for the given `(λ₀, λ₁)`.
pub fn optimal_alice(l0: Vec3, l1: Vec3) -> (Vec3, Vec3) {
    let unit = |v: Vec3| {
        let n = norm(v);
        if n > 1e-300 {
            [v[0] / n, v[1] / n, v[2] / n]
        } else {
            [0.0, 0.0, 1.0]
        }
    };
    (unit(add(l0, l1)), unit(sub(l0, l1)))
}
