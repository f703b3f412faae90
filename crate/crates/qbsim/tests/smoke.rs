#[test]
fn smoke() {
    let ms = qbsim::linalg::smoke();
    assert!(ms < 50.0, "gemm too slow: {ms} ms");
}
