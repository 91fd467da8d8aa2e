use std::process::ExitCode;

fn main() -> ExitCode {
    // die quietly when downstream closes the pipe (e.g. `chromasum ... | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    chromasum::cli::run()
}
