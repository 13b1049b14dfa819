import setup


def test_seed_env_copies_example_once(tmp_path, monkeypatch):
    monkeypatch.setattr(setup, "ROOT", tmp_path)
    (tmp_path / ".env.example").write_text("CLIFFSUB_ORACLE_SEED=42\n")
    assert setup.seed_env() == ".env written from .env.example"
    assert (tmp_path / ".env").read_text() == "CLIFFSUB_ORACLE_SEED=42\n"
    (tmp_path / ".env").write_text("CLIFFSUB_ORACLE_SEED=7\n")
    assert setup.seed_env() == ".env kept"
    assert (tmp_path / ".env").read_text() == "CLIFFSUB_ORACLE_SEED=7\n"


def test_smoke_check_runs_the_table_check():
    assert setup.SMOKE_CHECK[:2] == ["run.py", "table"]
    assert setup.smoke_check() == 0
