//! J-fractions and the ratio of consecutive Hankel transforms.
use catalan_hankel::catalan::{catalan_seq, combo_seq};
use catalan_hankel::jfrac::{jfraction_extract, ratio_check, tridiag_from_jfraction};
use catalan_hankel::ring::Rational;
use num_traits::One;

fn main() {
    let c: Vec<Rational> = catalan_seq(10).into_iter().map(Rational::from_integer).collect();
    let jf = jfraction_extract(&c, 5).unwrap();
    println!("Catalan: alphas {:?} betas {:?}", strs(&jf.alphas), strs(&jf.betas));

    let one = Rational::one();
    let seq = combo_seq(2, &one, &one, 8);
    let jf = jfraction_extract(&seq, 4).unwrap();
    println!("C(n+2)+C(n+3) / {}: alphas {:?} betas {:?}", jf.scale, strs(&jf.alphas), strs(&jf.betas));
    println!("{}", tridiag_from_jfraction(&jf, 3).unwrap().matrix());
    println!("{}", ratio_check(2, &one, &one, 4).unwrap());
}

fn strs(v: &[Rational]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}
