//! Riordan arrays: entries, products, inverses and the fundamental theorem.
use catalan_hankel::ring::Integer;
use catalan_hankel::riordan::RiordanPair;
use catalan_hankel::series::PowerSeries;

fn main() {
    let order = 5;
    let pascal = RiordanPair::<Integer>::pascal(order);
    println!("Pascal:\n{}", pascal.matrix(6).unwrap().matrix());
    println!("Pascal^-1:\n{}", pascal.inverse().unwrap().matrix(6).unwrap().matrix());

    let m = RiordanPair::<Integer>::ballot(order);
    println!("M:\n{}", m.matrix(6).unwrap().matrix());
    let mt = RiordanPair::<Integer>::ballot_tilde(order);
    println!("M~ * Pascal:\n{}", mt.mul(&pascal).unwrap().matrix(6).unwrap().matrix());

    let ones = PowerSeries::from_i64(&[1, 1, 1, 1, 1, 1], order);
    println!("Pascal applied to 1/(1-x): {}", pascal.apply(&ones).unwrap());
}
