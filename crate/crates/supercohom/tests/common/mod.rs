//! Example algebras shared by the integration tests.
#![allow(dead_code)]

use supercohom::fplinalg::PrimeField;
use supercohom::liesuper::LieSuperAlgebraSpec;

pub fn field(p: u32) -> PrimeField {
    PrimeField::new(p).unwrap()
}

pub fn k0(p: u32, toral: bool) -> LieSuperAlgebraSpec {
    let mut l = LieSuperAlgebraSpec::new(field(p), &["x"], &[]).unwrap();
    if toral {
        l.set_restriction_named("x", &[("x", 1)]).unwrap();
    }
    l
}

pub fn k1(p: u32) -> LieSuperAlgebraSpec {
    LieSuperAlgebraSpec::new(field(p), &[], &["y"]).unwrap()
}

pub fn abelian(p: u32, s: usize, t: usize) -> LieSuperAlgebraSpec {
    LieSuperAlgebraSpec::abelian(field(p), s, t)
}

pub fn heisenberg(p: u32) -> LieSuperAlgebraSpec {
    let mut l = LieSuperAlgebraSpec::new(field(p), &["x"], &["y"]).unwrap();
    l.set_bracket_named("y", "y", &[("x", 1)]).unwrap();
    l
}

/// {h, e} with [h,e] = c·e, h^[p] = h, e^[p] = 0.
pub fn borel_with(p: u32, c: i64) -> LieSuperAlgebraSpec {
    let mut l = LieSuperAlgebraSpec::new(field(p), &["h", "e"], &[]).unwrap();
    l.set_bracket_named("h", "e", &[("e", c)]).unwrap();
    l.set_restriction_named("h", &[("h", 1)]).unwrap();
    l
}

pub fn borel(p: u32) -> LieSuperAlgebraSpec {
    borel_with(p, 2)
}

/// Borel plus an odd y with [h,y] = y and [y,y] = e (or 0).
pub fn borel_odd(p: u32, square_is_e: bool) -> LieSuperAlgebraSpec {
    let mut l = LieSuperAlgebraSpec::new(field(p), &["h", "e"], &["y"]).unwrap();
    l.set_bracket_named("h", "e", &[("e", 2)]).unwrap();
    l.set_bracket_named("h", "y", &[("y", 1)]).unwrap();
    if square_is_e {
        l.set_bracket_named("y", "y", &[("e", 1)]).unwrap();
    }
    l.set_restriction_named("h", &[("h", 1)]).unwrap();
    l
}

pub fn all(p: u32) -> Vec<(&'static str, LieSuperAlgebraSpec)> {
    vec![
        ("k0bar", k0(p, false)),
        ("k0bar-toral", k0(p, true)),
        ("k1bar", k1(p)),
        ("abelian-1-1", abelian(p, 1, 1)),
        ("abelian-2-1", abelian(p, 2, 1)),
        ("abelian-1-2", abelian(p, 1, 2)),
        ("heisenberg-odd", heisenberg(p)),
        ("borel", borel(p)),
        ("borel-odd-e", borel_odd(p, true)),
        ("borel-odd-0", borel_odd(p, false)),
    ]
}

/// The examples whose restricted envelope has dimension at most `max`.
pub fn small(p: u32, max: usize) -> Vec<(&'static str, LieSuperAlgebraSpec)> {
    all(p).into_iter().filter(|(_, l)| (p as usize).pow(l.s() as u32) << l.t() <= max).collect()
}
