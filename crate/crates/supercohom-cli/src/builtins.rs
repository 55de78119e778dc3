//! The built-in example library.

use supercohom::fplinalg::PrimeField;
use supercohom::liesuper::LieSuperAlgebraSpec;

/// A named example algebra.
#[derive(Debug, Clone)]
pub struct Example {
    pub name: &'static str,
    pub description: &'static str,
    pub spec: LieSuperAlgebraSpec,
}

/// Names accepted by [`builtin`], in listing order.
pub const BUILTIN_NAMES: [&str; 10] = [
    "k0bar",
    "k0bar-toral",
    "k1bar",
    "abelian-1-1",
    "abelian-2-1",
    "abelian-1-2",
    "heisenberg-odd",
    "borel",
    "borel-odd-e",
    "borel-odd-0",
];

fn description(name: &str) -> &'static str {
    match name {
        "k0bar" => "one even basis vector x, x^[p] = 0",
        "k0bar-toral" => "one even basis vector x, x^[p] = x",
        "k1bar" => "one odd basis vector y",
        "abelian-1-1" => "abelian, one even and one odd basis vector, zero restriction",
        "abelian-2-1" => "abelian, two even and one odd basis vector, zero restriction",
        "abelian-1-2" => "abelian, one even and two odd basis vectors, zero restriction",
        "heisenberg-odd" => "x even central, y odd, [y,y] = x, x^[p] = 0",
        "borel" => "h, e even, [h,e] = 2e, h^[p] = h, e^[p] = 0",
        "borel-odd-e" => "borel plus odd y, [h,y] = y, [y,y] = e",
        "borel-odd-0" => "borel plus odd y, [h,y] = y, [y,y] = 0",
        _ => "",
    }
}

fn borel_like(f: PrimeField, odd: &[&str]) -> LieSuperAlgebraSpec {
    let mut l = LieSuperAlgebraSpec::new(f, &["h", "e"], odd).expect("distinct names");
    l.set_bracket_named("h", "e", &[("e", 2)]).expect("declared");
    l.set_restriction_named("h", &[("h", 1)]).expect("declared");
    l
}

/// The example `name` over F_p, or `None` for an unknown name or p not prime.
pub fn builtin(name: &str, p: u32) -> Option<Example> {
    let f = PrimeField::new(p).ok()?;
    let spec = match name {
        "k0bar" => LieSuperAlgebraSpec::new(f, &["x"], &[]).ok()?,
        "k0bar-toral" => {
            let mut l = LieSuperAlgebraSpec::new(f, &["x"], &[]).ok()?;
            l.set_restriction_named("x", &[("x", 1)]).ok()?;
            l
        }
        "k1bar" => LieSuperAlgebraSpec::new(f, &[], &["y"]).ok()?,
        "abelian-1-1" => LieSuperAlgebraSpec::abelian(f, 1, 1),
        "abelian-2-1" => LieSuperAlgebraSpec::abelian(f, 2, 1),
        "abelian-1-2" => LieSuperAlgebraSpec::abelian(f, 1, 2),
        "heisenberg-odd" => {
            let mut l = LieSuperAlgebraSpec::new(f, &["x"], &["y"]).ok()?;
            l.set_bracket_named("y", "y", &[("x", 1)]).ok()?;
            l
        }
        "borel" => borel_like(f, &[]),
        "borel-odd-e" | "borel-odd-0" => {
            let mut l = borel_like(f, &["y"]);
            l.set_bracket_named("h", "y", &[("y", 1)]).ok()?;
            if name == "borel-odd-e" {
                l.set_bracket_named("y", "y", &[("e", 1)]).ok()?;
            }
            l
        }
        _ => return None,
    };
    let name = BUILTIN_NAMES.iter().copied().find(|n| *n == name)?;
    Some(Example { name, description: description(name), spec })
}

/// Every built-in example over F_p.
pub fn builtin_examples(p: u32) -> Vec<Example> {
    BUILTIN_NAMES.iter().filter_map(|n| builtin(n, p)).collect()
}
