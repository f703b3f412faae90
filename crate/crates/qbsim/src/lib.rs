extern crate blas_src;

pub mod linalg;
