fn main() {
    // die quietly on a closed pipe instead of panicking mid-print
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(specarith::cli::run());
}
