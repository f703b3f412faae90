use ndarray::Array2;
use ndarray_linalg::{Eig, Eigh, Solve, UPLO};
use num_complex::Complex64;

pub type CMat = Array2<Complex64>;

pub fn smoke() -> f64 {
    let n = 148;
    let a = CMat::from_shape_fn((n, n), |(i, j)| {
        Complex64::new((i as f64 * 0.37).sin(), (j as f64 * 0.11).cos())
    });
    let b = a.t().map(|z| z.conj());
    let t0 = std::time::Instant::now();
    let mut c = a.dot(&b);
    for _ in 0..9 {
        c = a.dot(&b);
    }
    let gemm_ms = t0.elapsed().as_secs_f64() * 100.0;
    let h = (&c + &c.t().map(|z| z.conj())) * Complex64::new(0.5, 0.0);
    let t1 = std::time::Instant::now();
    let ev = h.eigh(UPLO::Lower).unwrap();
    let heev_ms = t1.elapsed().as_secs_f64() * 1000.0;
    let small = CMat::from_shape_fn((4, 4), |(i, j)| Complex64::new(i as f64, j as f64));
    let (vals, _) = small.eig().unwrap();
    let rhs = ndarray::Array1::from_elem(n, Complex64::new(1.0, 0.0));
    let _x = h.solve(&rhs).unwrap();
    println!(
        "gemm {gemm_ms:.3} ms  zheev {heev_ms:.3} ms  ev0 {:.3}  eig0 {}",
        ev.0[0], vals[0]
    );
    gemm_ms
}
