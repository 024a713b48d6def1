from models.finite_field.field import parse_field
from models.spectra.closed_forms import MIN_N
from pipeline.classify_handler import run_classify
from pipeline.spectrum_handler import GRAPHS, run_spectrum
from pipeline.verify_handler import run_verify
from utils.config import DEFAULT_SEED
from utils.errors import EXIT_FAILED_CLAIM, EXIT_OK, ShunyaError, error_result


def run_pipeline(field_text, seed=None, exact_cap=None):
    seed = DEFAULT_SEED if seed is None else seed
    try:
        spec = parse_field(field_text)
    except ShunyaError as exc:
        return error_result(exc)

    classify = run_classify(field_text)
    spectra = {
        graph_id: run_spectrum(field_text, graph_id, seed, exact_cap)
        for graph_id in GRAPHS
        if spec.n >= MIN_N[graph_id]
    }
    verify = run_verify(field_text, "all", seed, exact_cap)

    ok = (
        classify["exit_code"] == EXIT_OK
        and all(s["exit_code"] == EXIT_OK for s in spectra.values())
        and verify["exit_code"] == EXIT_OK
    )
    return {
        "field": spec.canonical(),
        "seed": seed,
        "classify": classify,
        "spectra": spectra,
        "verify": verify,
        "exit_code": EXIT_OK if ok else EXIT_FAILED_CLAIM,
    }
