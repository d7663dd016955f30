//! Eigenvalues of a dense real nonsymmetric matrix.
//!
//! Classic three-stage pipeline after Wilkinson and Reinsch: diagonal
//! balancing, reduction to upper Hessenberg form by stabilized elementary
//! similarity transforms, then the Francis double-shift QR iteration on the
//! Hessenberg matrix. Only eigenvalues are computed.

use crate::dense::DenseMatrix;
use crate::error::{Error, Result};

/// A complex eigenvalue as `(re, im)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Eigenvalue {
    pub re: f64,
    pub im: f64,
}

impl Eigenvalue {
    pub fn modulus(&self) -> f64 {
        self.re.hypot(self.im)
    }
}

/// Iterations allowed per eigenvalue before giving up.
const MAX_ITS: usize = 60;

pub fn eigenvalues(m: &DenseMatrix) -> Result<Vec<Eigenvalue>> {
    let mut a = m.clone();
    balance(&mut a);
    hessenberg(&mut a);
    hqr(&mut a)
}

/// Scales rows and columns by powers of two so that their off-diagonal norms
/// are comparable.
fn balance(a: &mut DenseMatrix) {
    const RADIX: f64 = 2.0;
    let n = a.order();
    let sqrdx = RADIX * RADIX;
    let mut done = false;
    while !done {
        done = true;
        for i in 0..n {
            let mut c = 0.0;
            let mut r = 0.0;
            for j in (0..n).filter(|&j| j != i) {
                c += a[(j, i)].abs();
                r += a[(i, j)].abs();
            }
            if c == 0.0 || r == 0.0 {
                continue;
            }
            let s = c + r;
            let mut f = 1.0;
            let mut g = r / RADIX;
            while c < g {
                f *= RADIX;
                c *= sqrdx;
            }
            g = r * RADIX;
            while c > g {
                f /= RADIX;
                c /= sqrdx;
            }
            if (c + r) / f < 0.95 * s {
                done = false;
                let inv = 1.0 / f;
                for j in 0..n {
                    a[(i, j)] *= inv;
                }
                for j in 0..n {
                    a[(j, i)] *= f;
                }
            }
        }
    }
}

/// Gaussian elimination with pivoting, applied as a similarity transform.
/// Entries below the subdiagonal are zeroed on return.
fn hessenberg(a: &mut DenseMatrix) {
    let n = a.order();
    for m in 1..n.saturating_sub(1) {
        let mut x = 0.0_f64;
        let mut piv = m;
        for j in m..n {
            if a[(j, m - 1)].abs() > x.abs() {
                x = a[(j, m - 1)];
                piv = j;
            }
        }
        if piv != m {
            a.swap_rows(piv, m, m - 1);
            a.swap_cols(piv, m);
        }
        if x != 0.0 {
            for i in m + 1..n {
                let mut y = a[(i, m - 1)];
                if y != 0.0 {
                    y /= x;
                    a[(i, m - 1)] = y;
                    for j in m..n {
                        a[(i, j)] -= y * a[(m, j)];
                    }
                    for j in 0..n {
                        a[(j, m)] += y * a[(j, i)];
                    }
                }
            }
        }
    }
    for i in 2..n {
        for j in 0..i - 1 {
            a[(i, j)] = 0.0;
        }
    }
}

/// Francis double-shift QR on an upper Hessenberg matrix, destroying it.
fn hqr(a: &mut DenseMatrix) -> Result<Vec<Eigenvalue>> {
    let n = a.order();
    let mut wr = vec![0.0; n];
    let mut wi = vec![0.0; n];
    let eps = f64::EPSILON;

    let mut anorm = 0.0;
    for i in 0..n {
        for j in i.saturating_sub(1)..n {
            anorm += a[(i, j)].abs();
        }
    }

    // `nn` is the last row of the active block; signed so that it can step
    // past zero when the final pair deflates.
    let mut nn = n as isize - 1;
    let mut t = 0.0;
    while nn >= 0 {
        let mut its = 0;
        loop {
            let u = nn as usize;
            // Look for a negligible subdiagonal element.
            let mut l = u;
            while l >= 1 {
                let mut s = a[(l - 1, l - 1)].abs() + a[(l, l)].abs();
                if s == 0.0 {
                    s = anorm;
                }
                if a[(l, l - 1)].abs() <= eps * s {
                    a[(l, l - 1)] = 0.0;
                    break;
                }
                l -= 1;
            }
            let mut x = a[(u, u)];
            if l == u {
                // One root found.
                wr[u] = x + t;
                wi[u] = 0.0;
                nn -= 1;
            } else {
                let mut y = a[(u - 1, u - 1)];
                let mut w = a[(u, u - 1)] * a[(u - 1, u)];
                if l == u - 1 {
                    // Two roots found.
                    let p = 0.5 * (y - x);
                    let q = p * p + w;
                    let z = q.abs().sqrt();
                    x += t;
                    if q >= 0.0 {
                        let z = p + z.copysign(p);
                        wr[u - 1] = x + z;
                        wr[u] = if z != 0.0 { x - w / z } else { x + z };
                        wi[u - 1] = 0.0;
                        wi[u] = 0.0;
                    } else {
                        wr[u - 1] = x + p;
                        wr[u] = x + p;
                        wi[u - 1] = -z;
                        wi[u] = z;
                    }
                    nn -= 2;
                } else {
                    if its == MAX_ITS {
                        return Err(Error::Numerical { index: u + 1 });
                    }
                    if its > 0 && its % 10 == 0 {
                        // Exceptional shift.
                        t += x;
                        for i in 0..=u {
                            a[(i, i)] -= x;
                        }
                        let s = a[(u, u - 1)].abs() + a[(u - 1, u - 2)].abs();
                        x = 0.75 * s;
                        y = x;
                        w = -0.4375 * s * s;
                    }
                    its += 1;
                    francis_step(a, l, u, x, y, w, eps);
                }
            }
            if !((l as isize) < nn - 1) {
                break;
            }
        }
    }
    Ok(wr
        .into_iter()
        .zip(wi)
        .map(|(re, im)| Eigenvalue { re, im })
        .collect())
}

/// One implicit double-shift QR sweep on rows/columns `l..=u`, with shift
/// parameters `x`, `y`, `w` from the trailing 2×2 block.
fn francis_step(a: &mut DenseMatrix, l: usize, u: usize, x: f64, y: f64, w: f64, eps: f64) {
    let (mut p, mut q, mut r);
    // Find two consecutive small subdiagonal elements.
    let mut m = u - 2;
    loop {
        let z = a[(m, m)];
        let rr = x - z;
        let ss = y - z;
        p = (rr * ss - w) / a[(m + 1, m)] + a[(m, m + 1)];
        q = a[(m + 1, m + 1)] - z - rr - ss;
        r = a[(m + 2, m + 1)];
        let s = p.abs() + q.abs() + r.abs();
        p /= s;
        q /= s;
        r /= s;
        if m == l {
            break;
        }
        let lhs = a[(m, m - 1)].abs() * (q.abs() + r.abs());
        let rhs = p.abs() * (a[(m - 1, m - 1)].abs() + z.abs() + a[(m + 1, m + 1)].abs());
        if lhs <= eps * rhs {
            break;
        }
        m -= 1;
    }
    for i in m + 2..=u {
        a[(i, i - 2)] = 0.0;
        if i != m + 2 {
            a[(i, i - 3)] = 0.0;
        }
    }
    for k in m..u {
        let mut scale = 1.0;
        if k != m {
            p = a[(k, k - 1)];
            q = a[(k + 1, k - 1)];
            r = if k != u - 1 { a[(k + 2, k - 1)] } else { 0.0 };
            scale = p.abs() + q.abs() + r.abs();
            if scale != 0.0 {
                p /= scale;
                q /= scale;
                r /= scale;
            }
        }
        let s = (p * p + q * q + r * r).sqrt().copysign(p);
        if s == 0.0 {
            continue;
        }
        if k == m {
            if l != m {
                a[(k, k - 1)] = -a[(k, k - 1)];
            }
        } else {
            a[(k, k - 1)] = -s * scale;
        }
        p += s;
        let hx = p / s;
        let hy = q / s;
        let hz = r / s;
        q /= p;
        r /= p;
        // Row modification.
        for j in k..=u {
            let mut pp = a[(k, j)] + q * a[(k + 1, j)];
            if k != u - 1 {
                pp += r * a[(k + 2, j)];
                a[(k + 2, j)] -= pp * hz;
            }
            a[(k + 1, j)] -= pp * hy;
            a[(k, j)] -= pp * hx;
        }
        // Column modification.
        let mmin = u.min(k + 3);
        for i in l..=mmin {
            let mut pp = hx * a[(i, k)] + hy * a[(i, k + 1)];
            if k != u - 1 {
                pp += hz * a[(i, k + 2)];
                a[(i, k + 2)] -= pp * r;
            }
            a[(i, k + 1)] -= pp * q;
            a[(i, k)] -= pp;
        }
    }
}
