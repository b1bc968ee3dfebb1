/*
 * Copyright 2026 The atrisk Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Drives the atrisk binary end to end.

#include <sys/wait.h>

#include <cmath>
#include <cstring>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

std::filesystem::path TmpDir() {
  const char* dir = std::getenv("ATRISK_TEST_TMP");
  const std::filesystem::path base =
      dir ? dir : std::filesystem::temp_directory_path() / "atrisk_cli";
  std::filesystem::create_directories(base);
  return base;
}

std::string Tmp(const std::string& name) { return (TmpDir() / name).string(); }

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void Spit(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

RunResult Run(const std::string& args) {
  const std::string out = Tmp("stdout.txt");
  const std::string err = Tmp("stderr.txt");
  const std::string cmd = std::string("'") + ATRISK_CLI_PATH + "' " + args +
                          " >'" + out + "' 2>'" + err + "'";
  const int status = std::system(cmd.c_str());
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code, Slurp(out), Slurp(err)};
}

std::map<std::string, std::string> KeyValues(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  bool in_block = false;
  while (std::getline(in, line)) {
    if (line == "[report]") {
      in_block = true;
      continue;
    }
    const auto eq = line.find('=');
    if (in_block && eq != std::string::npos) {
      kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
  }
  return kv;
}

const char* const kHeader =
    "gender,hispanic,major,physical_health,psych_health,diet,self_efficacy,"
    "importance,expectations,support,mod_days,mod_min,vig_days,vig_min,label\n";

TEST_CASE("synth") {
  const std::string empty = Tmp("empty.csv");
  REQUIRE(Run("synth --n 0 --seed 1 --out " + empty).exit_code == 0);
  CHECK(Slurp(empty) == kHeader);

  const std::string a = Tmp("a.csv");
  const std::string b = Tmp("b.csv");
  REQUIRE(Run("synth --n 146 --seed 1 --out " + a).exit_code == 0);
  REQUIRE(Run("synth --n 146 --seed 1 --out " + b).exit_code == 0);
  CHECK(Slurp(a) == Slurp(b));
  const auto piped = Run("synth --n 146 --seed 1");
  CHECK(piped.exit_code == 0);
  CHECK(piped.out == Slurp(a));
  CHECK(Run("synth --n 146 --seed 2").out != piped.out);

  const std::string spec = Tmp("bad_spec.json");
  Spit(spec, "{\"beta\": \"loud\"}");
  const auto bad = Run("synth --n 5 --spec " + spec);
  CHECK(bad.exit_code == 2);
  CHECK(bad.err.find("beta") != std::string::npos);
  CHECK(Run("synth --n 5 --spec /nonexistent/spec.json").exit_code == 2);
  CHECK(Run("synth --n -3").exit_code == 2);
  CHECK(Run("frobnicate").exit_code == 2);
  CHECK(Run("--version").out.find("0.1.0") != std::string::npos);
}

TEST_CASE("label") {
  const std::string in = Tmp("label_in.csv");
  const std::string out = Tmp("label_out.csv");
  Spit(in,
       "id,mod_days,mod_min,vig_days,vig_min\n"
       "a,2,50,2,30\n"
       "b,0,0,0,0\n"
       "c,0,0,3,20\n"
       "d,5,30,0,0\n"
       "e,4,30,0,0\n");
  REQUIRE(Run("label --in " + in + " --out " + out).exit_code == 0);
  CHECK(Slurp(out) ==
        "id,mod_days,mod_min,vig_days,vig_min,label\n"
        "a,2,50,2,30,not_at_risk\n"
        "b,0,0,0,0,at_risk\n"
        "c,0,0,3,20,not_at_risk\n"
        "d,5,30,0,0,not_at_risk\n"
        "e,4,30,0,0,at_risk\n");

  Spit(in, "mod_days,mod_min,vig_days,vig_min\n1,10,0,0\n1,10,0\n");
  const auto ragged = Run("label --in " + in + " --out " + out);
  CHECK(ragged.exit_code == 2);
  CHECK(ragged.err.find("line 3") != std::string::npos);
  Spit(in, "mod_days,mod_min,vig_days\n1,10,0\n");
  const auto missing = Run("label --in " + in + " --out " + out);
  CHECK(missing.exit_code == 2);
  CHECK(missing.err.find("vig_min") != std::string::npos);
}

TEST_CASE("train, cv and predict") {
  // Large enough that every observed category of the study appears.
  const std::string data = Tmp("train.csv");
  REQUIRE(Run("synth --n 1000 --seed 1 --out " + data).exit_code == 0);

  const std::string m1 = Tmp("m1.json");
  const std::string m2 = Tmp("m2.json");
  const auto t1 = Run("train --in " + data + " --model " + m1 + " --epochs 20 --seed 4");
  REQUIRE(t1.exit_code == 0);
  REQUIRE(Run("train --in " + data + " --model " + m2 + " --epochs 20 --seed 4")
              .exit_code == 0);
  CHECK(Slurp(m1) == Slurp(m2));
  CHECK(t1.out.find("inputs=36 hidden=19 outputs=2") != std::string::npos);
  CHECK(Slurp(m1).find("\"hidden\": 19") != std::string::npos);
  const auto acc_pos = t1.out.find("training_accuracy=");
  REQUIRE(acc_pos != std::string::npos);
  const std::string train_acc =
      t1.out.substr(acc_pos + 18, t1.out.find('\n', acc_pos) - acc_pos - 18);

  // Predicting the training file reproduces the training accuracy.
  const std::string scored = Tmp("scored.csv");
  const auto p = Run("predict --model " + m1 + " --in " + data + " --out " + scored);
  REQUIRE(p.exit_code == 0);
  CHECK(p.out.find("rows=1000\nwarnings=0\n") != std::string::npos);
  CHECK(p.out.find("accuracy=" + train_acc + "\n") != std::string::npos);
  const std::string scored_text = Slurp(scored);
  CHECK(scored_text.rfind(std::string(kHeader, std::strlen(kHeader) - 1) +
                              ",predicted_label,score_at_risk,score_not_at_risk,warning\n",
                          0) == 0);

  const std::string odd = Tmp("odd.csv");
  Spit(odd,
       "gender,hispanic,major,physical_health,psych_health,diet,self_efficacy,"
       "importance,expectations,support\n"
       "female,yes,sport_related,very_poor,good,fair,high,medium,high,high\n");
  const auto w = Run("predict --model " + m1 + " --in " + odd + " --out " + scored);
  CHECK(w.exit_code == 0);
  CHECK(w.out.find("warnings=1") != std::string::npos);
  CHECK(w.err.find("physical_health=very_poor") != std::string::npos);
  CHECK(Slurp(scored).find("at_risk,,,unknown_category:physical_health=very_poor") !=
        std::string::npos);

  Spit(odd, "gender,hispanic,major\nfemale,yes,sport_related\n");
  const auto missing = Run("predict --model " + m1 + " --in " + odd + " --out " + scored);
  CHECK(missing.exit_code == 2);
  CHECK(missing.err.find("physical_health") != std::string::npos);

  const std::string bad_model = Tmp("bad_model.json");
  Spit(bad_model, "{\"format\": \"atrisk-model\", \"format_version\": 99}");
  CHECK(Run("predict --model " + bad_model + " --in " + data + " --out " + scored)
            .exit_code == 2);

  const auto cv = Run("cv --in " + data + " --k 5 --epochs 10 --seed 1");
  REQUIRE(cv.exit_code == 0);
  const auto kv = KeyValues(cv.out);
  for (const char* key : {"k", "n", "tp", "tn", "fp", "fn", "accuracy", "tp_rate",
                          "tn_rate", "fp_rate", "fn_rate"}) {
    CAPTURE(key);
    CHECK(kv.count(key) == 1);
  }
  CHECK(kv.at("n") == "1000");
  CHECK(std::abs(std::stod(kv.at("tp_rate")) + std::stod(kv.at("fn_rate")) - 1.0) <=
        1e-9);
  CHECK(std::abs(std::stod(kv.at("tn_rate")) + std::stod(kv.at("fp_rate")) - 1.0) <=
        1e-9);
  const auto serial = Run("cv --in " + data + " --k 5 --epochs 10 --seed 1 --threads 1");
  CHECK(KeyValues(serial.out) == kv);

  const std::string small = Tmp("small.csv");
  REQUIRE(Run("synth --n 146 --seed 1 --out " + small).exit_code == 0);
  const auto too_many = Run("cv --in " + small + " --k 200");
  CHECK(too_many.exit_code == 2);
  CHECK(too_many.err.find("TooFewExamples") != std::string::npos);

  const std::string unlabeled = Tmp("unlabeled.csv");
  std::string text = Slurp(data);
  Spit(unlabeled, text.substr(0, text.find('\n') + 1) +
                      "male,yes,sport_related,good,good,good,high,high,high,high,1,10,0,0,\n");
  const auto u = Run("train --in " + unlabeled + " --model " + m2);
  CHECK(u.exit_code == 2);
  CHECK(u.err.find("MissingLabel") != std::string::npos);
  CHECK(Run("train --in " + data + " --model " + m2 + " --lr0 0").exit_code == 2);
}

}  // namespace
