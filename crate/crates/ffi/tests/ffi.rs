use std::ffi::{c_char, CStr, CString};
use std::process::Command;
use std::ptr;

use twin_hanoi_ffi::*;

fn c(s: &str) -> CString {
    CString::new(s).unwrap()
}

unsafe fn take_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = CStr::from_ptr(p).to_str().unwrap().to_owned();
    twin_hanoi_string_free(p);
    s
}

unsafe fn last_error() -> String {
    let p = twin_hanoi_last_error();
    assert!(!p.is_null());
    CStr::from_ptr(p).to_string_lossy().into_owned()
}

unsafe fn render(seq: *const TwinHanoiMoveSeq) -> String {
    take_string(twin_hanoi_seq_render(seq, false))
}

unsafe fn apply(seq: *const TwinHanoiMoveSeq, config: &str) -> String {
    let mut out = ptr::null_mut();
    assert_eq!(twin_hanoi_seq_apply(seq, c(config).as_ptr(), &mut out), TwinHanoiStatus::Ok);
    take_string(out)
}

#[test]
fn sequences_round_trip() {
    unsafe {
        let mut seq = ptr::null_mut();
        assert_eq!(twin_hanoi_sds(2, false, &mut seq), TwinHanoiStatus::Ok);
        assert_eq!(render(seq), "bcacba");
        assert_eq!(twin_hanoi_seq_len(seq), 6);
        twin_hanoi_seq_free(seq);

        for n in 1..=8u32 {
            assert_eq!(twin_hanoi_tts(n, false, &mut seq), TwinHanoiStatus::Ok);
            let zeros = "0".repeat(n as usize);
            let twos = "2".repeat(n as usize);
            assert_eq!(apply(seq, &format!("{zeros},{twos}")), format!("{twos},{zeros}"));
            twin_hanoi_seq_free(seq);
        }

        assert_eq!(twin_hanoi_corner(0, 2, 3, &mut seq), TwinHanoiStatus::Ok);
        assert_eq!(twin_hanoi_seq_len(seq), 7);
        assert_eq!(apply(seq, "000"), "222");
        twin_hanoi_seq_free(seq);
    }
}

#[test]
fn solvers_and_distances() {
    unsafe {
        let mut seq = ptr::null_mut();
        assert_eq!(twin_hanoi_transform(c("20").as_ptr(), c("01").as_ptr(), &mut seq), TwinHanoiStatus::Ok);
        assert_eq!(take_string(twin_hanoi_seq_render(seq, true)), "ab");
        twin_hanoi_seq_free(seq);

        assert_eq!(twin_hanoi_solve_twin(c("0120,2201").as_ptr(), c("1102,0021").as_ptr(), &mut seq), TwinHanoiStatus::Ok);
        assert_eq!(apply(seq, "0120,2201"), "1102,0021");
        assert!(twin_hanoi_seq_len(seq) <= 58);
        twin_hanoi_seq_free(seq);

        let mut d = 0u32;
        assert_eq!(twin_hanoi_distance(c("00,22").as_ptr(), c("22,00").as_ptr(), true, &mut d), TwinHanoiStatus::Ok);
        assert_eq!(d, 5);
        assert_eq!(twin_hanoi_distance(c("000").as_ptr(), c("222").as_ptr(), false, &mut d), TwinHanoiStatus::Ok);
        assert_eq!(d, 7);

        let mut code = 0u64;
        assert_eq!(twin_hanoi_state_code(c("21").as_ptr(), &mut code), TwinHanoiStatus::Ok);
        assert_eq!(code, 2 + 3);
    }
}

#[test]
fn closed_forms_struct() {
    unsafe {
        let mut cf = TwinHanoiClosedForms::default();
        assert_eq!(twin_hanoi_closed_forms(3, &mut cf), TwinHanoiStatus::Ok);
        assert_eq!(cf.gp_bound, 29);
        assert_eq!(twin_hanoi_closed_forms(0, &mut cf), TwinHanoiStatus::InvalidInput);
        assert_eq!(twin_hanoi_closed_forms(61, &mut cf), TwinHanoiStatus::InvalidInput);
    }
}

#[test]
fn error_codes_and_messages() {
    unsafe {
        let mut seq = ptr::null_mut();
        assert_eq!(twin_hanoi_solve_twin(c("00,01").as_ptr(), c("01,20").as_ptr(), &mut seq), TwinHanoiStatus::Incompatible);
        assert!(last_error().contains("incompatible"));
        assert!(seq.is_null());

        assert_eq!(twin_hanoi_transform(c("2x").as_ptr(), c("01").as_ptr(), &mut seq), TwinHanoiStatus::InvalidInput);
        assert_eq!(twin_hanoi_transform(ptr::null(), c("01").as_ptr(), &mut seq), TwinHanoiStatus::NullPointer);
        assert!(last_error().contains("from"));
        assert_eq!(twin_hanoi_tts(40, false, &mut seq), TwinHanoiStatus::CapacityExceeded);
        assert_eq!(twin_hanoi_tts(3, false, ptr::null_mut()), TwinHanoiStatus::NullPointer);
        assert_eq!(twin_hanoi_sds(5, true, &mut seq), TwinHanoiStatus::InvalidInput);
        assert_eq!(twin_hanoi_corner(1, 1, 3, &mut seq), TwinHanoiStatus::InvalidInput);
        assert_eq!(twin_hanoi_corner(3, 1, 3, &mut seq), TwinHanoiStatus::InvalidInput);

        assert_eq!(twin_hanoi_tts(2, false, &mut seq), TwinHanoiStatus::Ok);
        assert!(twin_hanoi_last_error().is_null());
        twin_hanoi_seq_free(seq);

        assert_eq!(twin_hanoi_seq_len(ptr::null()), 0);
        assert!(twin_hanoi_seq_render(ptr::null(), false).is_null());
        twin_hanoi_seq_free(ptr::null_mut());
        twin_hanoi_string_free(ptr::null_mut());
    }
}

#[test]
fn verify_returns_json() {
    unsafe {
        let mut json = ptr::null_mut();
        assert_eq!(twin_hanoi_verify(c("lemma").as_ptr(), 4, 10, 0, &mut json), TwinHanoiStatus::Ok);
        let report: serde_json::Value = serde_json::from_str(&take_string(json)).unwrap();
        assert_eq!(report["suite"], "lemma");
        assert_eq!(report["summary"]["ok"], true);
        assert_eq!(twin_hanoi_verify(c("bogus").as_ptr(), 4, 10, 0, &mut json), TwinHanoiStatus::InvalidInput);
    }
}

#[test]
fn header_compiles_as_c() {
    let dir = env!("CARGO_MANIFEST_DIR");
    let header = format!("{dir}/include/twin_hanoi.h");
    assert!(std::path::Path::new(&header).exists());
    let tmp = tempfile::tempdir().unwrap();
    let src = tmp.path().join("use.c");
    std::fs::write(
        &src,
        format!(
            "#include \"{header}\"\nint main(void) {{ TwinHanoiMoveSeq *s = 0; \
             return twin_hanoi_tts(3, false, &s) == TWIN_HANOI_STATUS_OK ? 0 : 1; }}\n"
        ),
    )
    .unwrap();
    match Command::new("cc").args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only"]).arg(&src).status() {
        Ok(status) => assert!(status.success()),
        Err(_) => eprintln!("no C compiler; header syntax check skipped"),
    }
}
