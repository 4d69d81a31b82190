use serde::{Deserialize, Serialize};

pub type Vec3 = [f64; 3];

/// Unit vector `(sin a sin b, sin a cos b, cos a)` from a polar angle `a`
/// and azimuth `b`.
pub fn unit_vector(polar: f64, azimuth: f64) -> Vec3 {
    let (sp, cp) = polar.sin_cos();
    let (sa, ca) = azimuth.sin_cos();
    [sp * sa, sp * ca, cp]
}

/// Measurement directions for Bob (`y`, `y′`) and Charlie (`z`, `z′`).
///
/// `alpha = [α₁, α₂, α₃, α₄]` parametrizes `z = u(α₁, α₂)` and `y = u(α₃, α₄)`;
/// `beta` does the same for `z′` and `y′`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeasurementSettings {
    pub alpha: [f64; 4],
    pub beta: [f64; 4],
}

impl MeasurementSettings {
    /// Angles ordered `[α₁, α₂, α₃, α₄, β₁, β₂, β₃, β₄]`.
    pub fn from_angles(angles: &[f64]) -> Self {
        assert_eq!(angles.len(), 8, "measurement settings take eight angles");
        Self {
            alpha: [angles[0], angles[1], angles[2], angles[3]],
            beta: [angles[4], angles[5], angles[6], angles[7]],
        }
    }

    pub fn angles(&self) -> [f64; 8] {
        let [a1, a2, a3, a4] = self.alpha;
        let [b1, b2, b3, b4] = self.beta;
        [a1, a2, a3, a4, b1, b2, b3, b4]
    }

    pub fn z(&self) -> Vec3 {
        unit_vector(self.alpha[0], self.alpha[1])
    }

    pub fn z_prime(&self) -> Vec3 {
        unit_vector(self.beta[0], self.beta[1])
    }

    pub fn y(&self) -> Vec3 {
        unit_vector(self.alpha[2], self.alpha[3])
    }

    pub fn y_prime(&self) -> Vec3 {
        unit_vector(self.beta[2], self.beta[3])
    }

    /// Wraps every angle into `[0, 2π)` without changing the directions.
    pub fn normalized(&self) -> Self {
        let wrap = |x: f64| x.rem_euclid(std::f64::consts::TAU);
        Self {
            alpha: self.alpha.map(wrap),
            beta: self.beta.map(wrap),
        }
    }
}

pub(crate) fn norm(v: Vec3) -> f64 {
    dot(v, v).sqrt()
}

pub(crate) fn dot(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn add(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

pub(crate) fn sub(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}
