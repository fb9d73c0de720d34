"""Runs the CLI on every acceptance config at two thread counts and compares
the reports (timings excluded). Also checks exit codes for bad input."""

import json
import pathlib
import subprocess
import sys
import tempfile


def run(cli, config, *extra):
    proc = subprocess.run([cli, "--config", str(config), *extra], capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def report(cli, config, threads):
    code, out, err = run(cli, config, "--threads", str(threads))
    if code != 0:
        raise SystemExit(f"{config.name}: exit {code}: {err}")
    data = json.loads(out)
    data.pop("timings_ms", None)
    return json.dumps(data, sort_keys=True)


def main():
    cli = sys.argv[1]
    configs = sorted(pathlib.Path(sys.argv[2]).glob("*.json"))
    if not configs:
        raise SystemExit("no configs")
    for config in configs:
        if report(cli, config, 1) != report(cli, config, 4):
            raise SystemExit(f"{config.name}: reports differ between thread counts")
        print(f"identical: {config.name}")

    with tempfile.TemporaryDirectory() as tmp:
        bad = pathlib.Path(tmp) / "bad.json"
        bad.write_text('{"task": "nu", "params": {"n": "two"}}')
        code, _, err = run(cli, bad)
        assert code == 1 and "params.n" in err, (code, err)
        heavy = pathlib.Path(tmp) / "heavy.json"
        heavy.write_text('{"task": "nu", "params": {"n": 3, "m_max": 6}, "limits": {"nh_max_m": 4}}')
        code, _, err = run(cli, heavy)
        assert code == 2, (code, err)
        code, out, _ = run(cli, configs[0], "--output", "table")
        assert code == 0 and out.startswith("task"), out
        code, _, _ = run(cli, configs[0], "--output", "xml")
        assert code == 1
        unvalidated = pathlib.Path(tmp) / "table.json"
        size = 600
        table = [[(a + b) % size for b in range(size)] for a in range(size)]
        unvalidated.write_text(json.dumps({
            "task": "invariant-basis", "variety": "commutative",
            "group": {"kind": "table", "table": table},
            "action": {"kind": "diagonal", "characters": [[1]]},
            "params": {"degree": 1}}))
        code, _, err = run(cli, unvalidated)
        assert "warning" in err or code == 1, (code, err)
    print("exit codes ok")


if __name__ == "__main__":
    main()
