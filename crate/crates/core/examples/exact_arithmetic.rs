//! Bivariate polynomials and exact rationals.
use catalan_hankel::poly::BivarPoly;
use catalan_hankel::ring::{rational, Ring};

fn main() {
    let p: BivarPoly = "a^2+4ab+3b^2".parse().unwrap();
    let q: BivarPoly = "a+b".parse().unwrap();
    println!("({p}) / ({q}) = {}", p.exact_div(&q).unwrap());
    println!("({q})^3 = {}", q.pow(3));
    println!("p(2,3) = {}", p.eval(&rational(2, 1), &rational(3, 1)));

    let x = rational(19, 7);
    println!("{x} + 31/49 = {}", x.add(&rational(31, 49)));
}
