//! Published values for the 4×4 worked example, shared by unit tests.

use ndarray::Array2;
use num_complex::Complex64;

use crate::linalg::CMat;

fn z(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn mat<const N: usize>(rows: [[Complex64; N]; N]) -> CMat {
    Array2::from_shape_fn((N, N), |(i, j)| rows[i][j])
}

pub fn s0() -> CMat {
    mat([
        [z(1., 0.), z(0., 1.), z(-1., 0.), z(0., -1.)],
        [z(0., -1.), z(2., 0.), z(0., 2.), z(-2., 0.)],
        [z(-1., 0.), z(0., -2.), z(3., 0.), z(0., 3.)],
        [z(0., 1.), z(-2., 0.), z(0., -3.), z(4., 0.)],
    ])
}

pub fn s1() -> CMat {
    mat([
        [z(8., 0.), z(-1., 4.), z(-5., 1.), z(4., -3.)],
        [z(-1., -4.), z(6., 0.), z(2., 1.), z(-5., -3.)],
        [z(-5., -1.), z(2., -1.), z(4., 0.), z(-3., 0.)],
        [z(4., 3.), z(-5., 3.), z(-3., 0.), z(6., 0.)],
    ])
}

pub fn s2() -> CMat {
    mat([
        [z(117., 0.), z(-56., 41.), z(-87., 26.), z(86., -15.)],
        [z(-56., -41.), z(92., 0.), z(63., 0.), z(-85., -41.)],
        [z(-87., -26.), z(63., 0.), z(81., 0.), z(-69., -26.)],
        [z(86., 15.), z(-85., 41.), z(-69., 26.), z(102., 0.)],
    ])
}

pub fn h0() -> CMat {
    mat([
        [z(1., 0.), z(0., 1.), z(-1., 0.), z(0., -1.), z(8., 0.)],
        [z(0., -1.), z(2., 0.), z(0., 2.), z(-2., 0.), z(-1., -4.)],
        [z(-1., 0.), z(0., -2.), z(3., 0.), z(0., 3.), z(-5., -1.)],
        [z(0., 1.), z(-2., 0.), z(0., -3.), z(4., 0.), z(4., 3.)],
        [z(8., 0.), z(-1., 4.), z(-5., 1.), z(4., -3.), z(117., 0.)],
    ])
}

pub fn h1() -> CMat {
    mat([
        [z(8., 0.), z(-1., 4.), z(-5., 1.)],
        [z(-1., -4.), z(6., 0.), z(2., 1.)],
        [z(-5., -1.), z(2., -1.), z(4., 0.)],
    ])
}

pub const H0_EIGS: [f64; 5] = [118.1688, 7.6381, 0.8146, 0.3711, 0.0073];
pub const H1_EIGS: [f64; 3] = [14.0143, 3.9496, 0.0361];

pub fn eigenvalues_f() -> Vec<Complex64> {
    vec![
        z(-8.1437, 0.0),
        z(-0.7723, 0.0),
        z(-0.3455, 2.5642),
        z(-0.3455, -2.5642),
        z(-0.1795, 4.9232),
        z(-0.1795, -4.9232),
        z(-0.0170, 4.3356),
        z(-0.0170, -4.3356),
    ]
}

/// Dominant part, coefficients of λ then 1.
pub fn dominant() -> [CMat; 2] {
    let o = z(0., 0.);
    [
        mat([
            [z(1., 0.), o, o, o],
            [o, z(1., 0.), z(0., 1.), o],
            [z(1., 0.), o, o, o],
            [o, z(0., 1.), z(1., 0.), o],
        ]),
        mat([
            [z(-4., 9.), z(2., -3.), z(-6., -4.), z(-2., 0.)],
            [z(12., 17.), z(-2., 4.), z(-2., 0.), z(1., -1.)],
            [z(36., -1.), z(-6., 7.), z(-12., 4.), o],
            [z(-5., 2.), z(10., 16.), z(14., 8.), z(-1., 1.)],
        ]),
    ]
}

/// Subordinated part, coefficients of λ then 1.
pub fn subordinated() -> [CMat; 2] {
    let o = z(0., 0.);
    [
        mat([
            [z(1., -1.), z(2., 1.), z(-1., 3.), o],
            [z(0., -2.), z(4., 0.), z(0., 5.), o],
            [z(1., 1.), z(-2., 1.), z(-1., -3.), o],
            [o, o, z(1., 0.), o],
        ]),
        mat([
            [z(-57., 43.), o, o, z(-2., -2.)],
            [z(-39., 76.), o, o, z(-1., -3.)],
            [z(29., -51.), o, o, z(2., 2.)],
            [z(12., 17.), o, o, z(-1., 1.)],
        ]),
    ]
}
