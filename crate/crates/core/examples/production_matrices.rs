//! Production matrices: from a tridiagonal conjugate back to the Hankel transform.
use catalan_hankel::matrix::HessenbergMatrix;
use catalan_hankel::ring::Integer;
use catalan_hankel::riordan::{column_rescale, matrix_from_production, production_matrix};
use catalan_hankel::suites::production_first_column;

fn main() {
    let p = HessenbergMatrix::tridiagonal(5, &Integer::from(8), &Integer::from(3), &Integer::from(3));
    let l = matrix_from_production(&p, 5).unwrap();
    println!("L:\n{}", l.matrix());
    let scaled = column_rescale(&l, &Integer::from(3)).unwrap();
    println!("L / 3^k:\n{}", scaled.matrix());
    println!("its production matrix:\n{}", production_matrix(&scaled).unwrap().matrix());
    println!("inverse:\n{}", scaled.inverse().unwrap().matrix());

    for (a, b) in [(1, 1), (2, 3), (-1, 4)] {
        println!("a={a} b={b}: {:?}", production_first_column(1, a, b, 6).unwrap());
    }
}
