/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_family_free: (a: number, b: number) => void;
export const family_mixture: (a: number, b: number, c: number, d: number) => [number, number, number];
export const family_saddle: (a: number) => [number, number];
export const family_superposition: (a: number, b: number, c: number) => [number, number, number];
export const family_surface: (a: number, b: number) => [number, number, number, number];
export const family_sweep: (a: number, b: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_start: () => void;
