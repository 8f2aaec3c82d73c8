#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include "foliaquant/runner.hpp"

// Times the serial reference runner against the OpenMP runner on the bundled
// models and confirms both produce the same report.
int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::atoi(argv[1]) : 1;
  bool identical = true;
  for (const char* name : {"darboux3", "scaled", "darboux5"}) {
    const fq::ModelSpec spec = fq::load_model_file(std::string(FQ_MODELS_DIR) + "/" + name + ".yaml");
    double serial_ms = 0.0, parallel_ms = 0.0;
    std::string serial_json, parallel_json;
    for (int r = 0; r < repeats; ++r) {
      auto t0 = std::chrono::steady_clock::now();
      serial_json = fq::to_json(fq::run_command(fq::Command::all, spec, fq::Execution::serial));
      auto t1 = std::chrono::steady_clock::now();
      parallel_json = fq::to_json(fq::run_command(fq::Command::all, spec, fq::Execution::parallel));
      auto t2 = std::chrono::steady_clock::now();
      serial_ms += std::chrono::duration<double, std::milli>(t1 - t0).count();
      parallel_ms += std::chrono::duration<double, std::milli>(t2 - t1).count();
    }
    const bool same = serial_json == parallel_json;
    identical = identical && same;
    std::cout << name << ": serial " << serial_ms / repeats << " ms, parallel " << parallel_ms / repeats
              << " ms, speedup " << serial_ms / parallel_ms << ", reports " << (same ? "identical" : "DIFFER") << "\n";
  }
  return identical ? 0 : 1;
}
