use std::sync::atomic::{AtomicBool, Ordering};

static STOP: AtomicBool = AtomicBool::new(false);

fn main() {
    let _ = ctrlc::set_handler(|| STOP.store(true, Ordering::SeqCst));
    let code = steffenlab::cli::run(
        std::env::args_os(),
        &mut std::io::stdin().lock(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
        &STOP,
    );
    std::process::exit(code);
}
