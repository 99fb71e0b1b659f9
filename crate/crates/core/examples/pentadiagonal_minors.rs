//! Principal minors of a pentadiagonal matrix via their generating function.
use catalan_hankel::hankel::{penta_minors_gf, pentadiagonal, principal_minors};
use catalan_hankel::ring::Integer;

fn main() {
    let [a, b, c, r] = [8, 5, 1, 1].map(Integer::from);
    let gf = penta_minors_gf(&a, &b, &c, &r);
    println!("gf = ({}) / ({})", gf.numerator, gf.denominator);
    println!("expansion: {}", gf.expand(8).unwrap());
    let direct = principal_minors(&pentadiagonal(&a, &b, &c, &r, 8), 8).unwrap();
    println!("direct:    {direct:?}");
}
