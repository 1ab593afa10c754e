use nalgebra::{DMatrix, Complex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

type C64 = Complex<f64>;

fn main() {
    // Hermitian 4x4: A = diag-free random Hermitian
    let n = 4;
    let mut rng = ChaCha12Rng::seed_from_u64(7);
    let mut a = DMatrix::<C64>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            a[(i, j)] = C64::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5);
        }
    }
    let h = (&a + a.adjoint()) * C64::new(0.5, 0.0);
    let eig = nalgebra::SymmetricEigen::new(h.clone());
    println!("eigenvalues: {:?}", eig.eigenvalues.as_slice());
    // reconstruct
    let d = DMatrix::from_diagonal(&eig.eigenvalues.map(|x| C64::new(x, 0.0)));
    let rec = &eig.eigenvectors * d * eig.eigenvectors.adjoint();
    let err = (&rec - &h).norm();
    println!("reconstruction frobenius err: {:.3e}", err);
    // SVD of complex matrix
    let svd = a.clone().svd(true, true);
    println!("singular values: {:?}", svd.singular_values.as_slice());
    // complex LU solve for Cayley
    let u = {
        let d = DMatrix::from_diagonal(&eig.eigenvalues.map(|x| C64::new(0.0, -x).exp()));
        &eig.eigenvectors * d * eig.eigenvectors.adjoint()
    };
    let id = DMatrix::<C64>::identity(n, n);
    let w = (&id - &u) * (&id + &u).try_inverse().unwrap() * C64::new(0.0, 1.0);
    let werr = (&w - w.adjoint()).norm();
    println!("cayley hermiticity err: {:.3e}", werr);
    println!("rand draw: {}", rng.gen::<f64>());
}
