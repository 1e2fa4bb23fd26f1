use clap::Parser;

fn main() {
    // die quietly when downstream pipes close (e.g. `hw37 table | head`)
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = hw37::cli::Cli::parse();
    std::process::exit(hw37::cli::run(cli));
}
