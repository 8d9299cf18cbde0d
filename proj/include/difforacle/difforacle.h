/*
 * Copyright 2026 The difforacle Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the difforacle library. All strings are UTF-8. Strings
 * returned through char** parameters are owned by the caller and released
 * with dfo_string_free. */

#ifndef DIFFORACLE_DIFFORACLE_H_
#define DIFFORACLE_DIFFORACLE_H_

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define DFO_API __declspec(dllexport)
#else
#define DFO_API __attribute__((visibility("default")))
#endif

typedef enum dfo_status {
  DFO_OK = 0,
  DFO_ERR_INVALID_ARGUMENT = 1,
  DFO_ERR_CONFIG = 2,
  DFO_ERR_IO = 3,
  DFO_ERR_SANDBOX = 4,
  DFO_ERR_LLM = 5,
  DFO_ERR_CASSETTE_MISS = 6,
  DFO_ERR_AMBIGUOUS_VERDICT = 7,
  DFO_ERR_GENERATION = 8,
  DFO_ERR_METRICS = 9,
  DFO_ERR_INTERNAL = 10
} dfo_status;

typedef struct dfo_session dfo_session;

DFO_API const char* dfo_version(void);
DFO_API const char* dfo_status_name(dfo_status status);

/* Message and error kind (e.g. "CassetteMiss") of the last failed call on
 * this thread. Valid until the next call on the same thread. */
DFO_API const char* dfo_last_error(void);
DFO_API const char* dfo_last_error_kind(void);

DFO_API void dfo_string_free(char* s);

/* Settings are layered: built-in defaults, then config_file (NULL to skip),
 * then DIFFORACLE_* environment variables when use_environment is nonzero,
 * then overrides_json (a JSON object, NULL or "" for none). */
DFO_API dfo_status dfo_session_create(const char* overrides_json, const char* config_file,
                                      int use_environment, dfo_session** out);
DFO_API void dfo_session_destroy(dfo_session* session);

/* Resolved settings as JSON, API key omitted. */
DFO_API dfo_status dfo_session_config(const dfo_session* session, char** config_json);

/* Searches one subject directory for a failure-inducing test case. *found is
 * set to 1 or 0; *outcome_json receives the outcome document. */
DFO_API dfo_status dfo_find(dfo_session* session, const char* subject_dir, int* found,
                            char** outcome_json);

/* Verdict for every test in tests_file against the buggy/patched pair in
 * subject_dir: a JSON array of {"test", "assertion", "category", "label"}. */
DFO_API dfo_status dfo_classify(dfo_session* session, const char* subject_dir,
                                const char* tests_file, char** verdicts_json);

/* Runs every subject, technique and run of a corpus and writes the reports
 * under the configured output directory. *report_json receives report.json. */
DFO_API dfo_status dfo_eval(dfo_session* session, const char* corpus_dir, char** report_json);

/* Rewrites the reports of an earlier eval from its per-cell outcome files. */
DFO_API dfo_status dfo_regenerate_reports(const char* out_dir, char** report_json);

#ifdef __cplusplus
}
#endif

#endif /* DIFFORACLE_DIFFORACLE_H_ */
