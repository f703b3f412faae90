fn main() {
    let ms = qbsim::linalg::smoke();
    println!("gemm10 avg {ms:.3} ms");
}
