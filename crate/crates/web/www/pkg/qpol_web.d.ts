/* tslint:disable */
/* eslint-disable */

/**
 * A worked family at a fixed mixing probability `p`.
 */
export class Family {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    /**
     * `p diag(α, 1-α) ⊕ (1-p) diag(β, γ, 1-β-γ)`.
     */
    static mixture(p: number, alpha: number, beta: number, gamma: number): Family;
    saddle(): Float64Array;
    /**
     * `√p |N1, 0⟩ + √(1-p) |N2, 0⟩`.
     */
    static superposition(n1: number, n2: number, p: number): Family;
    surface(grid: number): Float64Array;
    sweep(points: number): Float64Array;
}

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_family_free: (a: number, b: number) => void;
    readonly family_mixture: (a: number, b: number, c: number, d: number) => [number, number, number];
    readonly family_saddle: (a: number) => [number, number];
    readonly family_superposition: (a: number, b: number, c: number) => [number, number, number];
    readonly family_surface: (a: number, b: number) => [number, number, number, number];
    readonly family_sweep: (a: number, b: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
