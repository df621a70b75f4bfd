/* SPDX-License-Identifier: Apache-2.0 */

#ifndef WORLDSIM_WORLDSIM_H
#define WORLDSIM_WORLDSIM_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define WS_API __attribute__((visibility("default")))
#else
#define WS_API
#endif

/* Return codes. They double as process exit codes for the CLI. */
typedef enum ws_status {
    WS_OK = 0,
    WS_ERR_VALIDATION = 1, /* bad input: config, arguments, incompatible checkpoint */
    WS_ERR_RUNTIME = 2     /* I/O failure, divergence, internal error */
} ws_status;

/* Message of the last failed call on this thread; "" after a success. */
WS_API const char* ws_last_error_message(void);

WS_API const char* ws_version(void);

/* Result text (JSON) of the last successful stage call on this thread. */
WS_API const char* ws_last_result_json(void);

/* Pipeline configuration ---------------------------------------------------- */

typedef struct ws_config ws_config;

/* Parses a JSON config file. WORLDSIM_OUT overrides the output root. */
WS_API ws_status ws_config_load(const char* path, ws_config** out);
/* Parses JSON text (no environment override). */
WS_API ws_status ws_config_parse(const char* json_text, ws_config** out);
WS_API void ws_config_free(ws_config* config);
WS_API ws_status ws_config_set_output_root(ws_config* config, const char* root);
/* Effective configuration as JSON; the pointer stays valid until the next call with this handle. */
WS_API const char* ws_config_json(ws_config* config);
WS_API const char* ws_config_output_root(const ws_config* config);

/* Stages. Paths may be NULL to use the default location under the output root. */
WS_API ws_status ws_generate_data(const ws_config* config);
WS_API ws_status ws_train_tokenizer(const ws_config* config);
WS_API ws_status ws_tokenize(const char* tokenizer_ckpt, const char* dataset_dir, const char* out_dir);
WS_API ws_status ws_train_world_model(const ws_config* config, const char* tokenizer_ckpt, int force);
WS_API ws_status ws_train_decoder(const ws_config* config, const char* tokenizer_ckpt, int force);
WS_API ws_status ws_scaling_study(const ws_config* config, const char* tokenizer_ckpt, int force);
WS_API ws_status ws_fit_scaling_law(const char* records_path, const char* out_dir, int use_ema, double ema_decay);

/* Rollout ----------------------------------------------------------------- */

typedef struct ws_rollout_options {
    const char* world_model;     /* required */
    const char* decoder;         /* NULL: tokens only */
    const char* tokenizer;       /* required with an episode context */
    const char* context;         /* episode directory, or NULL / "none" */
    const char* prompt;          /* NULL: none */
    const char* negative_prompt; /* NULL: none */
    const char* actions;         /* JSON file, or NULL / "none" */
    const char* out_dir;         /* required */
    const ws_config* config;     /* optional: defaults and checkpoint hash checks */
    int context_steps;           /* < 0: default */
    int horizon;                 /* < 0: default */
    int k;                       /* < 0: default */
    int backward;                /* < 0: default, 0: forward, 1: backward */
    int force;
    uint64_t seed;
} ws_rollout_options;

WS_API void ws_rollout_options_init(ws_rollout_options* options);
WS_API ws_status ws_rollout(const ws_rollout_options* options);

/* Self-check: runs the fast invariant suite; *failed receives the failure count. */
WS_API ws_status ws_selfcheck(int* failed);

/* Model handles ----------------------------------------------------------- */

typedef struct ws_world_model ws_world_model;

WS_API ws_status ws_world_model_load(const char* path, ws_world_model** out);
WS_API void ws_world_model_free(ws_world_model* model);
WS_API ws_status ws_world_model_param_count(const ws_world_model* model, int64_t* out);
/* Stream length T*(m+n+l) and codebook size K. */
WS_API ws_status ws_world_model_layout(const ws_world_model* model, int64_t* sequence_length, int64_t* codebook_size);
/* Generates `horizon` frames with no context; tokens receives horizon*n ids. */
WS_API ws_status ws_world_model_generate(ws_world_model* model, int horizon, int k, uint64_t seed, const char* prompt,
                                         int64_t* tokens, size_t capacity, size_t* written);

typedef struct ws_tokenizer ws_tokenizer;

WS_API ws_status ws_tokenizer_load(const char* path, ws_tokenizer** out);
WS_API void ws_tokenizer_free(ws_tokenizer* tok);
/* Encodes one H x W RGB image (bytes [H][W][3]) into (H/D)*(W/D) token ids. */
WS_API ws_status ws_tokenizer_encode(ws_tokenizer* tok, const uint8_t* rgb, int height, int width, int64_t* tokens, size_t capacity,
                                     size_t* written);

#ifdef __cplusplus
}
#endif

#endif /* WORLDSIM_WORLDSIM_H */
