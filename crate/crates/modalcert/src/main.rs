/// Checking walks proof trees as deep as the inputs nest, so the work runs
/// on a thread whose stack comfortably covers the parser caps even in
/// unoptimized builds.
const STACK_SIZE: usize = 64 * 1024 * 1024;

fn main() {
    let worker = std::thread::Builder::new()
        .stack_size(STACK_SIZE)
        .spawn(modalcert::cli::run)
        .expect("spawning the worker thread");
    let code = worker.join().unwrap_or(101);
    std::process::exit(code);
}
