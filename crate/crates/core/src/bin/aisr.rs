use aisemiring::cli;

fn main() {
    // AISR_WORKERS pins the rayon pool size; results do not depend on it.
    if let Ok(n) = std::env::var("AISR_WORKERS") {
        if let Ok(n) = n.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
    let outcome = cli::run(std::env::args());
    if !outcome.output.is_empty() {
        println!("{}", outcome.output.trim_end());
    }
    std::process::exit(outcome.exit_code);
}
