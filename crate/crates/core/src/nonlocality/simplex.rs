//! Derivative-free Nelder–Mead minimizer with dimension-adaptive coefficients.

/// Stopping rules and initial simplex size.
#[derive(Debug, Clone, Copy)]
pub struct NelderMead {
    pub max_iters: usize,
    /// Stop once `f(worst) - f(best) <= tol * (|f(best)| + tol)`.
    pub tol: f64,
    /// Edge length of the axis-aligned starting simplex.
    pub initial_step: f64,
}

impl Default for NelderMead {
    fn default() -> Self {
        Self {
            max_iters: 400,
            tol: 1e-9,
            initial_step: 0.5,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Minimum {
    pub x: Vec<f64>,
    pub value: f64,
    pub iterations: usize,
    pub evaluations: usize,
}

impl NelderMead {
    pub fn minimize(&self, mut f: impl FnMut(&[f64]) -> f64, x0: &[f64]) -> Minimum {
        let n = x0.len();
        assert!(n >= 1, "empty parameter vector");
        let nf = n as f64;
        // Gao & Han coefficients; they reduce to the classic ones for n = 2.
        let reflect = 1.0;
        let expand = 1.0 + 2.0 / nf;
        let contract = 0.75 - 1.0 / (2.0 * nf);
        let shrink = 1.0 - 1.0 / nf;

        let mut evaluations = 0;
        let mut eval = |x: &[f64], evaluations: &mut usize| {
            *evaluations += 1;
            let v = f(x);
            if v.is_nan() {
                f64::INFINITY
            } else {
                v
            }
        };

        let mut points: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
        points.push(x0.to_vec());
        for i in 0..n {
            let mut p = x0.to_vec();
            p[i] += self.initial_step;
            points.push(p);
        }
        let mut values: Vec<f64> = points.iter().map(|p| eval(p, &mut evaluations)).collect();

        let mut iterations = 0;
        let mut centroid = vec![0.0; n];
        let mut trial = vec![0.0; n];
        let mut trial2 = vec![0.0; n];
        let mut order: Vec<usize> = (0..=n).collect();

        while iterations < self.max_iters {
            order.sort_by(|&a, &b| values[a].total_cmp(&values[b]));
            let best = order[0];
            let worst = order[n];
            let second_worst = order[n - 1];
            if values[worst] - values[best] <= self.tol * (values[best].abs() + self.tol) {
                break;
            }
            iterations += 1;

            centroid.iter_mut().for_each(|c| *c = 0.0);
            for &idx in &order[..n] {
                for (c, x) in centroid.iter_mut().zip(&points[idx]) {
                    *c += x / nf;
                }
            }

            let along = |coef: f64, out: &mut Vec<f64>, worst_pt: &[f64]| {
                for ((o, c), w) in out.iter_mut().zip(&centroid).zip(worst_pt) {
                    *o = c + coef * (c - w);
                }
            };

            along(reflect, &mut trial, &points[worst]);
            let fr = eval(&trial, &mut evaluations);

            if fr < values[best] {
                along(expand, &mut trial2, &points[worst]);
                let fe = eval(&trial2, &mut evaluations);
                if fe < fr {
                    points[worst].copy_from_slice(&trial2);
                    values[worst] = fe;
                } else {
                    points[worst].copy_from_slice(&trial);
                    values[worst] = fr;
                }
                continue;
            }
            if fr < values[second_worst] {
                points[worst].copy_from_slice(&trial);
                values[worst] = fr;
                continue;
            }

            // Outside contraction if the reflection beat the worst point, inside otherwise.
            let (coef, reference) = if fr < values[worst] {
                (reflect * contract, fr)
            } else {
                (-contract, values[worst])
            };
            along(coef, &mut trial2, &points[worst]);
            let fc = eval(&trial2, &mut evaluations);
            if fc < reference {
                points[worst].copy_from_slice(&trial2);
                values[worst] = fc;
                continue;
            }

            let anchor = points[best].clone();
            for &idx in &order[1..] {
                for (x, a) in points[idx].iter_mut().zip(&anchor) {
                    *x = a + shrink * (*x - a);
                }
                values[idx] = eval(&points[idx], &mut evaluations);
            }
        }

        let best = (0..=n)
            .min_by(|&a, &b| values[a].total_cmp(&values[b]))
            .expect("non-empty simplex");
        Minimum {
            x: points[best].clone(),
            value: values[best],
            iterations,
            evaluations,
        }
    }
}
